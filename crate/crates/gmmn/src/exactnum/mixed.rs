//! Elements of Q(zeta_n)[v, v^-1].

use super::{CycQ, LaurentZ};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixedScalar {
    n: u32,
    terms: BTreeMap<i32, CycQ>,
}

impl MixedScalar {
    pub fn zero(n: u32) -> Self {
        MixedScalar {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_cyc(CycQ::one(n))
    }

    pub fn from_cyc(c: CycQ) -> Self {
        let mut out = Self::zero(c.order());
        out.add_term(0, c);
        out
    }

    pub fn from_laurent(n: u32, l: &LaurentZ) -> Self {
        let mut out = Self::zero(n);
        for (e, c) in l.terms() {
            out.add_term(e, CycQ::from_bigint(n, c.clone()));
        }
        out
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i32) -> CycQ {
        self.terms.get(&e).cloned().unwrap_or_else(|| CycQ::zero(self.n))
    }

    fn add_term(&mut self, e: i32, c: CycQ) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(e, s);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    /// Numeric value at a complex v.
    pub fn eval(&self, v: num_complex::Complex64) -> num_complex::Complex64 {
        self.terms.iter().map(|(&e, c)| c.embed() * v.powi(e)).sum()
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let mut out = Self::zero(self.n);
        for (&e, c) in &self.terms {
            out.add_term(e, c.scale_int(&k.into()));
        }
        out
    }
}

impl fmt::Display for MixedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| format!("({c})*v^{e}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
