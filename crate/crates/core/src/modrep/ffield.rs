use num_integer::Integer;

use crate::error::{Error, Result};
use crate::permgroup::is_prime;

/// Element of `F_q`, encoded as the base-p digits of its polynomial coordinates.
pub type Fq = u32;

/// The finite field `F_q`, `q = p^k`, with a distinguished element of order `m`.
///
/// The lift `ω^j ↦ ζ_m^j` identifies the m-th roots of unity of `F_q` with those of
/// `Q(ζ_m)`; every Brauer character value computed in the crate goes through it.
#[derive(Debug, Clone)]
pub struct FField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    m: u32,
    omega: Fq,
    exp: Vec<Fq>,
    log: Vec<u32>,
}

fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        for (j, &mj) in modulus.iter().enumerate() {
            let idx = d - k + j;
            prod[idx] = (prod[idx] + p - (c * mj) % p) % p;
        }
    }
    prod.truncate(k);
    prod.resize(k, 0);
    prod
}

fn digits(x: u32, p: u32, k: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(k as usize);
    let mut x = x;
    for _ in 0..k {
        v.push(x % p);
        x /= p;
    }
    v
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Monic polynomial of degree `k` with no factor of degree `1..=k/2`, by trial division.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let k = poly.len() - 1;
    for d in 1..=k / 2 {
        for low in 0..p.pow(d as u32) {
            let mut f = digits(low, p, d as u32);
            f.push(1);
            if poly_rem(poly, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let df = f.len() - 1;
    if r.len() <= df {
        return r;
    }
    for d in (df..r.len()).rev() {
        let c = r[d];
        if c == 0 {
            continue;
        }
        for (j, &fj) in f.iter().enumerate() {
            let idx = d - df + j;
            r[idx] = (r[idx] + p - (c * fj) % p) % p;
        }
    }
    r.truncate(df);
    r
}

impl FField {
    /// Smallest `F_{p^k}` containing a primitive m-th root of unity.
    pub fn new(p: u32, m: u32) -> Result<FField> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || m.gcd(&p) != 1 {
            return Err(Error::InternalInconsistency(format!(
                "conductor {m} must be prime to p = {p}"
            )));
        }
        let mut k = 1u32;
        while (p.pow(k) - 1) % m != 0 {
            k += 1;
        }
        let q = p.pow(k);
        let modulus = (0..p.pow(k))
            .map(|low| {
                let mut f = digits(low, p, k);
                f.push(1);
                f
            })
            .find(|f| k == 1 || is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree");
        let mul = |a: Fq, b: Fq| -> Fq {
            undigits(
                &poly_mulmod(&digits(a, p, k), &digits(b, p, k), &modulus, p),
                p,
            )
        };
        let order = |a: Fq| -> u32 {
            let mut x = a;
            let mut o = 1;
            while x != 1 {
                x = mul(x, a);
                o += 1;
            }
            o
        };
        let generator = (1..q)
            .find(|&a| order(a) == q - 1)
            .expect("F_q^× is cyclic");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        let mut x = 1;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = mul(x, generator);
        }
        let omega = exp[((q - 1) / m) as usize % exp.len()];
        Ok(FField {
            p,
            k,
            q,
            modulus,
            m,
            omega,
            exp,
            log,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn omega(&self) -> Fq {
        self.omega
    }

    /// `ω^j`.
    pub fn omega_power(&self, j: u32) -> Fq {
        self.pow(self.omega, j)
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[e as usize]
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let e = (self.q - 1 - self.log[a as usize]) % (self.q - 1);
        Ok(self.exp[e as usize])
    }

    pub fn pow(&self, a: Fq, n: u32) -> Fq {
        if a == 0 {
            return if n == 0 { 1 } else { 0 };
        }
        let e = (self.log[a as usize] as u64 * n as u64) % (self.q as u64 - 1);
        self.exp[e as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fq) -> u32 {
        let l = self.log[a as usize];
        (self.q - 1) / l.gcd(&(self.q - 1))
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        0..self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_choices() {
        let f = FField::new(3, 2).unwrap();
        assert_eq!((f.size(), f.omega()), (3, 2));
        let f = FField::new(2, 3).unwrap();
        assert_eq!(f.size(), 4);
        assert_eq!(f.order(f.omega()), 3);
        let f = FField::new(2, 1).unwrap();
        assert_eq!((f.size(), f.omega()), (2, 1));
        let f = FField::new(3, 4).unwrap();
        assert_eq!(f.size(), 9);
        assert_eq!(f.order(f.omega()), 4);
        let f = FField::new(2, 5).unwrap();
        assert_eq!(f.size(), 16);
        assert!(FField::new(4, 3).is_err());
        assert!(FField::new(3, 6).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, m) in [(2, 3), (3, 4), (2, 7), (5, 3), (2, 5)] {
            let f = FField::new(p, m).unwrap();
            let q = f.size();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in [0, 1, q - 1, q / 2] {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}
