//! Integer Laurent polynomials in v.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentZ {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn from_int(k: i64) -> Self {
        Self::monomial(0, BigInt::from(k))
    }

    pub fn monomial(exp: i32, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentZ { terms }
    }

    pub fn v() -> Self {
        Self::monomial(1, BigInt::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Quantum number [k] = (v^k - v^-k)/(v - v^-1) = v^{k-1} + v^{k-3} + .. + v^{1-k}.
    pub fn qnum(k: i64) -> Self {
        let mut out = Self::zero();
        if k == 0 {
            return out;
        }
        let (sign, k) = if k < 0 { (-1, -k) } else { (1, k) };
        let mut e = k - 1;
        while e >= 1 - k {
            out.add_term(e as i32, BigInt::from(sign));
            e -= 2;
        }
        out
    }

    pub fn qfact(k: u32) -> Self {
        (1..=k as i64).fold(Self::one(), |a, j| &a * &Self::qnum(j))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |a, _| &a * self)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, c * k);
        }
        out
    }

    pub fn shift(&self, by: i32) -> Self {
        LaurentZ {
            terms: self.terms.iter().map(|(&e, c)| (e + by, c.clone())).collect(),
        }
    }

    /// Exact division; None when the quotient is not an integer Laurent polynomial.
    pub fn div_exact(&self, d: &LaurentZ) -> Option<LaurentZ> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dlo = d.min_exp().unwrap();
        let dhi = d.max_exp().unwrap();
        let lead = d.coeff(dhi);
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some(rhi) = r.max_exp() {
            if rhi - dhi < r.min_exp().unwrap() - dlo {
                return None;
            }
            let c = r.coeff(rhi);
            let (qc, rem) = c.div_rem(&lead);
            if !rem.is_zero() {
                return None;
            }
            let shift = rhi - dhi;
            q.add_term(shift, qc.clone());
            for (&e, dc) in &d.terms {
                r.add_term(e + shift, -(dc * &qc));
            }
        }
        Some(q)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Evaluate at v = 1.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn parse(s: &str) -> Result<LaurentZ, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err("empty Laurent polynomial".into());
        }
        let mut out = LaurentZ::zero();
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b.to_string()),
                None => (1, t.trim_start_matches('+').to_string()),
            };
            let (coef, exp) = match body.find('v') {
                None => (body.as_str(), 0),
                Some(pos) => {
                    let c = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(|| format!("bad term {t}"))?
                            .parse::<i32>()
                            .map_err(|_| format!("bad exponent in {t}"))?
                    };
                    (c, e)
                }
            };
            let c: BigInt = if coef.is_empty() {
                BigInt::one()
            } else {
                coef.parse().map_err(|_| format!("bad coefficient in {t}"))?
            };
            out.add_term(exp, c * sign);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentZ {
    /// Highest power first, e.g. `v^2+2+v^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if !s.is_empty() || neg {
                s.push(if neg { '-' } else { '+' });
            }
            let mono = match e {
                0 => String::new(),
                1 => "v".to_string(),
                _ => format!("v^{e}"),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}{mono}"));
            }
        }
        write!(f, "{s}")
    }
}

impl fmt::Debug for LaurentZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentZ({self})")
    }
}

impl Add for &LaurentZ {
    type Output = LaurentZ;
    fn add(self, o: &LaurentZ) -> LaurentZ {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentZ {
    type Output = LaurentZ;
    fn sub(self, o: &LaurentZ) -> LaurentZ {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentZ {
    type Output = LaurentZ;
    fn mul(self, o: &LaurentZ) -> LaurentZ {
        let mut out = LaurentZ::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentZ {
    type Output = LaurentZ;
    fn neg(self) -> LaurentZ {
        LaurentZ {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Add for LaurentZ {
    type Output = LaurentZ;
    fn add(self, o: LaurentZ) -> LaurentZ {
        &self + &o
    }
}

impl Mul for LaurentZ {
    type Output = LaurentZ;
    fn mul(self, o: LaurentZ) -> LaurentZ {
        &self * &o
    }
}
