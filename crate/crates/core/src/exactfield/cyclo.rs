use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn totient(m: u32) -> usize {
    (1..=m).filter(|k| k.gcd(&m) == 1).count()
}

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    // x^m - 1
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m % d == 0) {
        num = divide_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[i + j] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Coordinates of `ζ_m^k` on the power basis, for `k = 0..m`.
fn zeta_table(m: u32) -> Arc<Vec<Vec<i64>>> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<Vec<Vec<i64>>>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().unwrap().get(&m) {
        return t.clone();
    }
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    let mut out = Vec::with_capacity(m as usize);
    let mut cur = vec![0i64; deg];
    cur[0] = 1;
    for _ in 0..m {
        out.push(cur.clone());
        // multiply by x and reduce with the monic relation
        let top = cur[deg - 1];
        let mut next = vec![0i64; deg];
        next[1..deg].copy_from_slice(&cur[..deg - 1]);
        for (j, n) in next.iter_mut().enumerate() {
            *n -= top * phi[j];
        }
        cur = next;
    }
    let t = Arc::new(out);
    tables.lock().unwrap().insert(m, t.clone());
    t
}

/// An element of `Q(ζ_m)` in coordinates on the basis `1, ζ, …, ζ^{φ(m)-1}`, where
/// `ζ = exp(2πi/m)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    m: u32,
    coords: Vec<Rat>,
}

impl Cyclo {
    pub fn zero(m: u32) -> Cyclo {
        Cyclo {
            m,
            coords: vec![Rat::zero(); totient(m)],
        }
    }

    pub fn one(m: u32) -> Cyclo {
        Cyclo::from_rat(m, Rat::one())
    }

    pub fn from_rat(m: u32, r: Rat) -> Cyclo {
        let mut c = Cyclo::zero(m);
        c.coords[0] = r;
        c
    }

    pub fn from_int(m: u32, n: i64) -> Cyclo {
        Cyclo::from_rat(m, Rat::from_integer(BigInt::from(n)))
    }

    pub fn from_coords(m: u32, coords: Vec<Rat>) -> Result<Cyclo> {
        if coords.len() != totient(m) {
            return Err(Error::ShapeMismatch(format!(
                "Q(zeta_{m}) needs {} coordinates, got {}",
                totient(m),
                coords.len()
            )));
        }
        Ok(Cyclo { m, coords })
    }

    /// `ζ^k`, any integer `k`.
    pub fn zeta_power(m: u32, k: i64) -> Cyclo {
        let k = k.rem_euclid(m as i64) as usize;
        let t = zeta_table(m);
        Cyclo {
            m,
            coords: t[k]
                .iter()
                .map(|&c| Rat::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.coords[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coords[0])
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_integer())
    }

    pub fn scale(&self, r: &Rat) -> Cyclo {
        Cyclo {
            m: self.m,
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Accumulates `Σ_k n_k ζ^k` given exponent multiplicities (length `m`).
    pub fn from_exponent_counts(m: u32, counts: &[i64]) -> Cyclo {
        let t = zeta_table(m);
        let deg = totient(m);
        let mut acc = vec![0i64; deg];
        for (k, &n) in counts.iter().enumerate() {
            if n != 0 {
                for (a, &c) in acc.iter_mut().zip(&t[k]) {
                    *a += n * c;
                }
            }
        }
        Cyclo {
            m,
            coords: acc
                .into_iter()
                .map(|c| Rat::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    fn check(&self, other: &Cyclo) {
        assert_eq!(self.m, other.m, "cyclotomic conductor mismatch");
    }

    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Cyclo::from_rat(self.m, r.recip()));
        }
        // solve (multiplication by self) · x = 1 over Q
        let deg = self.coords.len();
        let columns: Vec<Cyclo> = (0..deg)
            .map(|j| self * &Cyclo::zeta_power(self.m, j as i64))
            .collect();
        let mut a: Vec<Vec<Rat>> = (0..deg)
            .map(|i| {
                let mut row: Vec<Rat> = columns.iter().map(|c| c.coords[i].clone()).collect();
                row.push(if i == 0 { Rat::one() } else { Rat::zero() });
                row
            })
            .collect();
        for col in 0..deg {
            let piv = (col..deg)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::DivisionByZero)?;
            a.swap(col, piv);
            let pinv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &pinv;
            }
            for r in 0..deg {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..=deg {
                        let t = &a[col][c] * &f;
                        a[r][c] -= t;
                    }
                }
            }
        }
        Ok(Cyclo {
            m: self.m,
            coords: a.into_iter().map(|row| row[deg].clone()).collect(),
        })
    }

    /// Galois automorphism `ζ ↦ ζ^k`, `k` prime to `m`.
    pub fn galois(&self, k: i64) -> Cyclo {
        assert!(self.m == 1 || (k.rem_euclid(self.m as i64) as u32).gcd(&self.m) == 1);
        let mut acc = Cyclo::zero(self.m);
        for (j, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                acc += &Cyclo::zeta_power(self.m, k * j as i64).scale(c);
            }
        }
        acc
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Cyclo {
        self.galois(-1)
    }

    /// Total order on coordinates, used only for canonical sorting.
    pub fn cmp_coords(&self, other: &Cyclo) -> Ordering {
        self.coords.cmp(&other.coords)
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_coord_strings(m: u32, coords: &[String]) -> Result<Cyclo> {
        let coords = coords
            .iter()
            .map(|s| {
                s.parse::<Rat>()
                    .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Cyclo::from_coords(m, coords)
    }
}

impl fmt::Display for Cyclo {
    /// Renders `a0 + a1*z + a2*z^2 + …` with `z = ζ_m`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let z = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "{z}")?,
                _ => write!(f, "{abs}*{z}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({self})", self.m)
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        self.check(rhs);
        Cyclo {
            m: self.m,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self.check(rhs);
        Cyclo {
            m: self.m,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            m: self.m,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        self.check(rhs);
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        let m = self.m as usize;
        let mut by_exp: Vec<Rat> = vec![Rat::zero(); m];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    by_exp[(i + j) % m] += a * b;
                }
            }
        }
        let t = zeta_table(self.m);
        let mut coords = vec![Rat::zero(); self.coords.len()];
        for (k, c) in by_exp.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (acc, &z) in coords.iter_mut().zip(&t[k]) {
                if z != 0 {
                    *acc += c * Rat::from_integer(BigInt::from(z));
                }
            }
        }
        Cyclo { m: self.m, coords }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $f(self, rhs: Cyclo) -> Cyclo {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $f(self, rhs: &Cyclo) -> Cyclo {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        self.check(rhs);
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        self.check(rhs);
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}
