//! Closed-form spectra and eigenfunctions of `-y'' + x^(2N+2) y = E x^N y`.

mod consistency;
mod eigenfunctions;
mod generating;
mod jet;
mod residual;
mod wkb;

use serde::Serialize;

use crate::error::{param, Result};

pub use consistency::{decomposition_consistency, route_consistency, Consistency};
pub use eigenfunctions::{
    eigenfunction, eigenfunction_even, eigenfunction_odd, EigenfunctionHandle, Route,
};
pub use generating::{
    generating_coefficients, kummer_initial_value_at, target_coefficients, GeneratingForm,
};
pub use jet::Jet;
pub use residual::{default_fd_step, ode_residual, ode_residual_with_energy, second_derivative};
pub use wkb::wkb_action;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    EvenParity,
    OddParity,
    OddN,
}

/// One eigenpair label: exponent `N`, index `n` and the exact eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EigenSpec {
    exponent: i64,
    index: i64,
    energy: i64,
    branch: Branch,
}

impl EigenSpec {
    /// Even N: `E = 2m(N+2) + N + 1` for `n = 2m`, `2m(N+2) + N + 3` for
    /// `n = 2m + 1`. Odd N: `E = (2n+1)(N+2)` for every integer `n`.
    pub fn new(exponent: i64, index: i64) -> Result<Self> {
        if exponent < -1 {
            return param(format!("exponent N={exponent} must be >= -1"));
        }
        let k = exponent + 2;
        let (energy, branch) = if exponent % 2 == 0 {
            if index < 0 {
                return param(format!("even N needs n >= 0, got {index}"));
            }
            let m = index / 2;
            if index % 2 == 0 {
                (2 * m * k + exponent + 1, Branch::EvenParity)
            } else {
                (2 * m * k + exponent + 3, Branch::OddParity)
            }
        } else {
            ((2 * index + 1) * k, Branch::OddN)
        };
        Ok(Self { exponent, index, energy, branch })
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    pub fn energy(&self) -> i64 {
        self.energy
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }
}

/// Eigenvalues for `n_lo..=n_hi`, sorted by `n`; empty when `n_lo > n_hi`.
pub fn eigenvalues(exponent: i64, n_lo: i64, n_hi: i64) -> Result<Vec<EigenSpec>> {
    if exponent < -1 {
        return param(format!("exponent N={exponent} must be >= -1"));
    }
    if exponent % 2 == 0 && n_lo < 0 && n_lo <= n_hi {
        return param(format!("even N needs n >= 0, got range {n_lo}..={n_hi}"));
    }
    (n_lo..=n_hi).map(|n| EigenSpec::new(exponent, n)).collect()
}
