//! Truncated power series in one variable, used to read off Taylor
//! coefficients of closed-form generating functions without complex
//! arithmetic.

use std::ops::{Add, Mul, Sub};

/// Coefficients `c_0 .. c_{len-1}` of a power series truncated at `t^len`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet(Vec<f64>);

impl Jet {
    pub fn constant(c: f64, len: usize) -> Self {
        let mut v = vec![0.0; len];
        v[0] = c;
        Jet(v)
    }

    /// The series `c + t`.
    pub fn variable(c: f64, len: usize) -> Self {
        let mut j = Self::constant(c, len);
        if len > 1 {
            j.0[1] = 1.0;
        }
        j
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, s: f64) -> Self {
        Jet(self.0.iter().map(|c| c * s).collect())
    }

    pub fn recip(&self) -> Self {
        let n = self.len();
        let mut r = vec![0.0; n];
        r[0] = 1.0 / self.0[0];
        for k in 1..n {
            let acc: f64 = (1..=k).map(|j| self.0[j] * r[k - j]).sum();
            r[k] = -acc * r[0];
        }
        Jet(r)
    }

    pub fn exp(&self) -> Self {
        let n = self.len();
        let mut e = vec![0.0; n];
        e[0] = self.0[0].exp();
        for k in 1..n {
            let acc: f64 = (1..=k).map(|j| j as f64 * self.0[j] * e[k - j]).sum();
            e[k] = acc / k as f64;
        }
        Jet(e)
    }

    /// `self^alpha` for a series with positive constant term.
    pub fn powf(&self, alpha: f64) -> Self {
        let n = self.len();
        let f0 = self.0[0];
        let mut p = vec![0.0; n];
        p[0] = f0.powf(alpha);
        for k in 1..n {
            let acc: f64 = (1..=k)
                .map(|j| (alpha * j as f64 - (k - j) as f64) * self.0[j] * p[k - j])
                .sum();
            p[k] = acc / (k as f64 * f0);
        }
        Jet(p)
    }

    /// `g(self)` from the derivatives `g^{(k)}(c_0)`, `k = 0 .. len-1`.
    pub fn compose(&self, derivs: &[f64]) -> Self {
        let n = self.len();
        let mut shifted = self.clone();
        shifted.0[0] = 0.0;
        let mut out = Jet::constant(0.0, n);
        let mut power = Jet::constant(1.0, n);
        let mut fact = 1.0;
        for (k, d) in derivs.iter().enumerate().take(n) {
            if k > 0 {
                power = &power * &shifted;
                fact *= k as f64;
            }
            out = &out + &power.scale(d / fact);
        }
        out
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, o: &Jet) -> Jet {
        Jet(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, o: &Jet) -> Jet {
        Jet(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, o: &Jet) -> Jet {
        let n = self.len();
        let mut v = vec![0.0; n];
        for i in 0..n {
            for j in 0..n - i {
                v[i + j] += self.0[i] * o.0[j];
            }
        }
        Jet(v)
    }
}
