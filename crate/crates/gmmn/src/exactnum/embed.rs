//! Decimal embedding of cyclotomic numbers to a requested number of digits.
//! Fixed-point big-integer arithmetic with guard digits.

use super::CycQ;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

const GUARD: u32 = 12;

fn pow10(p: u32) -> BigInt {
    BigInt::from(10).pow(p)
}

/// arctan(1/x) scaled by 10^p.
fn arctan_inv(x: i64, p: u32) -> BigInt {
    let scale = pow10(p);
    let x2 = BigInt::from(x * x);
    let mut term = &scale / BigInt::from(x);
    let mut sum = term.clone();
    let mut k = 1i64;
    while !term.is_zero() {
        term = &term / &x2;
        let t = &term / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= t;
        } else {
            sum += t;
        }
        k += 1;
    }
    sum
}

/// pi scaled by 10^p (Machin).
fn pi_fixed(p: u32) -> BigInt {
    (arctan_inv(5, p) * 16) - (arctan_inv(239, p) * 4)
}

/// (cos x, sin x) for x scaled by 10^p, |x| <= 7.
fn cos_sin(x: &BigInt, p: u32) -> (BigInt, BigInt) {
    let scale = pow10(p);
    let mut c = scale.clone();
    let mut s = x.clone();
    let mut term = x.clone();
    let mut k: i64 = 1;
    let mut ct = scale.clone();
    loop {
        // term_k = x^k / k!
        ct = -(&ct * x * x) / (&scale * &scale) / BigInt::from((2 * k - 1) * (2 * k));
        term = -(&term * x * x) / (&scale * &scale) / BigInt::from((2 * k) * (2 * k + 1));
        if ct.is_zero() && term.is_zero() {
            break;
        }
        c += &ct;
        s += &term;
        k += 1;
    }
    (c, s)
}

fn format_fixed(v: &BigInt, p: u32, digits: u32) -> String {
    // round to `digits` decimals
    let drop = p - digits;
    let d = pow10(drop);
    let half = &d / 2;
    let neg = v.is_negative();
    let a = v.abs();
    let (q, r) = a.div_rem(&d);
    let q = if r >= half { q + BigInt::one() } else { q };
    let s = q.to_string();
    let s = if s.len() <= digits as usize {
        format!("{}{}", "0".repeat(digits as usize + 1 - s.len()), s)
    } else {
        s
    };
    let (ip, fp) = s.split_at(s.len() - digits as usize);
    let is_zero = q.is_zero();
    format!("{}{}.{}", if neg && !is_zero { "-" } else { "" }, ip, fp)
}

/// Real and imaginary parts of `x` as decimal strings with `digits` decimals.
pub fn embed_digits(x: &CycQ, digits: u32) -> (String, String) {
    assert!(digits >= 1);
    let p = digits + GUARD;
    let n = x.order() as i64;
    let two_pi = pi_fixed(p) * 2;
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    for (k, c) in x.numerators().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // reduce the angle to (-pi, pi]
        let kk = if 2 * k as i64 > n { k as i64 - n } else { k as i64 };
        let angle = &two_pi * BigInt::from(kk) / BigInt::from(n);
        let (cs, sn) = cos_sin(&angle, p);
        re += cs * c;
        im += sn * c;
    }
    let den = x.denominator();
    let re = re / den;
    let im = im / den;
    (format_fixed(&re, p, digits), format_fixed(&im, p, digits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        let p = pi_fixed(40);
        assert!(p.to_string().starts_with("31415926535897932384626433832795028841"));
    }

    #[test]
    fn sqrt2() {
        let x = CycQ::root_sum(8, [(1, 1), (-1, 1)]);
        let (re, im) = embed_digits(&x, 30);
        assert_eq!(re, "1.414213562373095048801688724210");
        assert_eq!(im, "0.000000000000000000000000000000");
    }

    #[test]
    fn agrees_with_f64() {
        let x = CycQ::root_sum(72, [(5, 3), (11, -2), (40, 7)]);
        let (re, im) = embed_digits(&x, 14);
        let z = x.embed();
        assert!((re.parse::<f64>().unwrap() - z.re).abs() < 1e-12);
        assert!((im.parse::<f64>().unwrap() - z.im).abs() < 1e-12);
    }
}
