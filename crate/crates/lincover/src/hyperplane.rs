use rand::seq::index::sample;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};

/// `{v : a·v = 0}` for a nonzero normal `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Hyperplane {
    pub normal: Vec<Elem>,
    /// Number of nonzero coordinates of the normal.
    pub k: usize,
}

impl Hyperplane {
    pub fn new(field: &FieldSpec, normal: Vec<Elem>) -> Result<Self> {
        if normal.is_empty() {
            return Err(Error::InvalidArgument(
                "dimension must be at least 1".into(),
            ));
        }
        if let Some(&x) = normal.iter().find(|&&x| x as u32 >= field.q) {
            return Err(Error::InvalidArgument(format!(
                "{x} is not an element of GF({})",
                field.q
            )));
        }
        let k = normal.iter().filter(|&&x| x != 0).count();
        if k == 0 {
            return Err(Error::InvalidArgument("normal vector is zero".into()));
        }
        Ok(Self { normal, k })
    }

    /// The coordinate hyperplane `x_i = 0`.
    pub fn coordinate(d: usize, i: usize) -> Self {
        let mut normal = vec![0; d];
        normal[i] = 1;
        Self { normal, k: 1 }
    }

    /// A random normal with exactly `k` nonzero coordinates.
    pub fn random_with_support<R: Rng>(
        field: &FieldSpec,
        d: usize,
        k: usize,
        rng: &mut R,
    ) -> Result<Self> {
        if k == 0 || k > d {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= k <= d, got k = {k}, d = {d}"
            )));
        }
        let mut normal = vec![0; d];
        for i in sample(rng, d, k) {
            normal[i] = rng.gen_range(1..field.q) as Elem;
        }
        Ok(Self { normal, k })
    }

    pub fn dimension(&self) -> usize {
        self.normal.len()
    }

    pub fn contains(&self, field: &FieldSpec, v: &[Elem]) -> bool {
        field.dot(&self.normal, v) == 0
    }

    /// Scaled so that the first nonzero coordinate is 1.
    pub fn canonical(&self, field: &FieldSpec) -> Self {
        let lead = *self.normal.iter().find(|&&x| x != 0).unwrap();
        let s = field.inv(lead);
        Self {
            normal: self.normal.iter().map(|&x| field.mul(s, x)).collect(),
            k: self.k,
        }
    }

    /// Every hyperplane of `GF(q)^d` once, by canonical normal in
    /// lexicographic order.
    pub fn all(field: &FieldSpec, d: usize) -> Vec<Self> {
        let q = field.q as usize;
        let mut out = Vec::new();
        for lead in (0..d).rev() {
            let tail = d - lead - 1;
            for code in 0..q.pow(tail as u32) {
                let mut normal = vec![0; d];
                normal[lead] = 1;
                let mut c = code;
                for i in (lead + 1..d).rev() {
                    normal[i] = (c % q) as Elem;
                    c /= q;
                }
                let k = normal.iter().filter(|&&x| x != 0).count();
                out.push(Self { normal, k });
            }
        }
        out
    }
}

/// Calls `f` on every vector of `GF(q)^d`, last coordinate fastest.
pub(crate) fn for_each_vector(q: u32, d: usize, mut f: impl FnMut(&[Elem])) {
    let mut v = vec![0 as Elem; d];
    loop {
        f(&v);
        let mut i = d;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            v[i] += 1;
            if (v[i] as u32) < q {
                break;
            }
            v[i] = 0;
        }
    }
}

/// `q^d`, or a cap error.
pub(crate) fn space_size(q: u32, d: usize, cap: u64) -> Result<u64> {
    let size = (q as u64).checked_pow(d as u32).unwrap_or(u64::MAX);
    if size > cap {
        return Err(Error::CapExceeded {
            what: "q^d",
            value: size,
            cap,
        });
    }
    Ok(size)
}

/// Rank of the matrix whose rows are `rows`.
pub fn rank(field: &FieldSpec, rows: &[Vec<Elem>]) -> usize {
    let mut basis: Vec<Vec<Elem>> = Vec::new();
    for row in rows {
        if let Some(r) = reduce(field, &basis, row) {
            basis.push(r);
        }
    }
    basis.len()
}

/// Reduces `row` against an echelon `basis` whose rows each have a leading 1
/// in a distinct column; returns the normalized remainder if it is nonzero.
pub(crate) fn reduce(field: &FieldSpec, basis: &[Vec<Elem>], row: &[Elem]) -> Option<Vec<Elem>> {
    let mut r = row.to_vec();
    for b in basis {
        let lead = b.iter().position(|&x| x != 0).unwrap();
        let c = r[lead];
        if c != 0 {
            for (x, &y) in r.iter_mut().zip(b) {
                *x = field.sub(*x, field.mul(c, y));
            }
        }
    }
    let lead = r.iter().position(|&x| x != 0)?;
    let s = field.inv(r[lead]);
    for x in r.iter_mut() {
        *x = field.mul(s, *x);
    }
    Some(r)
}
