//! Small finite fields GF(p^e) with q ≤ 32, stored as lookup tables.
//!
//! An element is an integer `0..q` whose base-`p` digits are the
//! coefficients of a polynomial of degree `< e`, lowest degree first.

use crate::error::{Error, Result};

pub type Elem = u8;

/// Largest supported field order.
pub const MAX_Q: u32 = 32;

/// Pinned irreducible moduli for the non-prime orders, coefficients lowest
/// degree first.
pub const MODULI: &[(u32, &[u32])] = &[
    (4, &[1, 1, 1]),
    (8, &[1, 1, 0, 1]),
    (9, &[1, 0, 1]),
    (16, &[1, 1, 0, 0, 1]),
    (25, &[2, 0, 1]),
    (27, &[1, 2, 0, 1]),
    (32, &[1, 0, 1, 0, 0, 1]),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    pub q: u32,
    /// Monic modulus of degree `e`, lowest coefficient first; `[0, 1]` for
    /// prime fields.
    pub modulus: Vec<u32>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Writes `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=e/2`.
pub fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let e = modulus.len() - 1;
    if e == 0 || modulus[e] % p != 1 {
        return false;
    }
    for deg in 1..=e / 2 {
        for code in 0..p.pow(deg as u32) {
            let mut divisor: Vec<u32> = (0..deg).map(|i| code / p.pow(i as u32) % p).collect();
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// GF(q) with the pinned modulus.
    pub fn new(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q)
            .filter(|_| q <= MAX_Q)
            .ok_or(Error::UnsupportedField(q))?;
        if e == 1 {
            return Self::with_modulus(p, &[0, 1]);
        }
        let modulus = MODULI
            .iter()
            .find(|(qq, _)| *qq == q)
            .map(|(_, m)| *m)
            .unwrap();
        Self::with_modulus(p, modulus)
    }

    /// GF(p^e) for an arbitrary monic irreducible modulus of degree `e`.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        let e = modulus.len() as u32 - 1;
        if e > 1 && !is_irreducible(modulus, p) {
            return Err(Error::Reducible {
                p,
                modulus: modulus.to_vec(),
            });
        }
        let q = p.pow(e);
        if q > MAX_Q {
            return Err(Error::UnsupportedField(q));
        }
        let digits = |x: u32| -> Vec<u32> { (0..e).map(|i| x / p.pow(i) % p).collect() };
        let encode = |d: &[u32]| -> u32 {
            d.iter()
                .enumerate()
                .map(|(i, &c)| c * p.pow(i as u32))
                .sum()
        };
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&sum) as Elem;
                let mut prod = vec![0u32; 2 * e as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = if e == 1 {
                    vec![prod[0]]
                } else {
                    poly_rem(&prod, modulus, p)
                };
                r.resize(e as usize, 0);
                mul[(a * q + b) as usize] = encode(&r) as Elem;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap() as Elem)
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q)
                        .find(|&b| mul[(a * q + b) as usize] == 1)
                        .expect("field element has an inverse") as Elem
                }
            })
            .collect();
        Ok(Self {
            p,
            e,
            q,
            modulus: modulus.to_vec(),
            add,
            mul,
            neg,
            inv,
        })
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `0` has none and maps to `0`.
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|x| x as Elem)
    }

    pub fn dot(&self, a: &[Elem], v: &[Elem]) -> Elem {
        a.iter()
            .zip(v)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}
