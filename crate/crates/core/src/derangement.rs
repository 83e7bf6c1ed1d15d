//! Derangement counts, proportions and witnesses, two-orbit actions, Sylow
//! certificates, and routing of degrees `n = pq` to the argument that
//! covers them.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::caps::Caps;
use crate::classes::{conjugacy_classes, ConjugacyClassTable};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::sylow::{is_prime, p_part, sylow_subgroup};

/// True iff `g` fixes no point of `omega`.
pub fn is_derangement(g: &Permutation, omega: &[usize]) -> bool {
    omega.iter().all(|&x| g.image(x) != x)
}

fn check_invariant(group: &PermGroup, omega: &[usize]) -> Result<()> {
    if omega.is_empty() || !group.is_invariant(omega) {
        return Err(Error::NotInvariant);
    }
    Ok(())
}

/// How a count or a search reached its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Random,
    Classes,
    Enumeration,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Random => "random",
            Method::Classes => "classes",
            Method::Enumeration => "enumeration",
        })
    }
}

/// Sums the sizes of the classes whose representative fixes a point of
/// `omega`. The fixed-point set size is a class function.
pub fn count_nonderangements_from_classes(table: &ConjugacyClassTable, omega: &[usize]) -> BigUint {
    table
        .classes
        .iter()
        .filter(|c| !is_derangement(&c.representative, omega))
        .map(|c| &c.size)
        .sum()
}

pub fn count_nonderangements_by_enumeration(
    group: &PermGroup,
    omega: &[usize],
    cap: u64,
) -> Result<BigUint> {
    check_invariant(group, omega)?;
    let count = group
        .elements(cap)?
        .filter(|g| !is_derangement(g, omega))
        .count();
    Ok(BigUint::from(count))
}

/// Number of elements fixing at least one point of `omega`, counted over
/// conjugacy classes.
pub fn count_nonderangements(
    group: &PermGroup,
    omega: &[usize],
    caps: &Caps,
    seed: u64,
) -> Result<BigUint> {
    check_invariant(group, omega)?;
    let table = conjugacy_classes(group, caps, seed)?;
    Ok(count_nonderangements_from_classes(&table, omega))
}

/// Proportion of non-derangements, kept as `count / |G|` without reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PndrValue {
    pub numerator: BigUint,
    pub denominator: BigUint,
}

impl PndrValue {
    pub fn new(numerator: BigUint, denominator: BigUint) -> Self {
        assert!(!denominator.is_zero() && numerator <= denominator);
        Self {
            numerator,
            denominator,
        }
    }

    pub fn zero() -> Self {
        Self::new(BigUint::zero(), BigUint::one())
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(
            self.numerator.clone().into(),
            self.denominator.clone().into(),
        )
    }

    /// Approximate value for display only.
    pub fn to_f64(&self) -> f64 {
        let r = self.to_rational();
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for PndrValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl Serialize for PndrValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PndrValue", 2)?;
        st.serialize_field("den", &self.denominator.to_string())?;
        st.serialize_field("num", &self.numerator.to_string())?;
        st.end()
    }
}

pub fn pndr(group: &PermGroup, omega: &[usize], caps: &Caps, seed: u64) -> Result<PndrValue> {
    let count = count_nonderangements(group, omega, caps, seed)?;
    Ok(PndrValue::new(count, group.order()))
}

/// Upper bound for the proportion of a group with two invariant sets: the
/// sum of the proportions of the two induced actions.
pub fn pndr_pair_bound(a: &PndrValue, b: &PndrValue) -> BigRational {
    a.to_rational() + b.to_rational()
}

/// Result of a derangement search. `Inconclusive` means no exhaustive
/// strategy fit in the caps; it never means "none exists".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerangementSearch {
    Found {
        witness: Permutation,
        method: Method,
    },
    NoneExists {
        method: Method,
    },
    Inconclusive {
        samples: u64,
        reason: String,
    },
}

impl DerangementSearch {
    pub fn witness(&self) -> Option<&Permutation> {
        match self {
            DerangementSearch::Found { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

/// Random sampling first, then an exhaustive scan over elements or over
/// class representatives when the caps allow one.
pub fn find_derangement(
    group: &PermGroup,
    omega: &[usize],
    seed: u64,
    caps: &Caps,
) -> Result<DerangementSearch> {
    check_invariant(group, omega)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if !group.is_trivial() {
        for _ in 0..caps.random_samples {
            let g = group.random_element(&mut rng);
            if is_derangement(&g, omega) {
                return Ok(DerangementSearch::Found {
                    witness: g,
                    method: Method::Random,
                });
            }
        }
    }
    let order = group.order();
    if order <= BigUint::from(caps.enumeration) {
        let found = group
            .elements(caps.enumeration)?
            .find(|g| is_derangement(g, omega));
        return Ok(match found {
            Some(witness) => DerangementSearch::Found {
                witness,
                method: Method::Enumeration,
            },
            None => DerangementSearch::NoneExists {
                method: Method::Enumeration,
            },
        });
    }
    match conjugacy_classes(group, caps, seed) {
        Ok(table) => {
            let found = table
                .classes
                .iter()
                .map(|c| &c.representative)
                .find(|g| is_derangement(g, omega));
            Ok(match found {
                Some(witness) => DerangementSearch::Found {
                    witness: witness.clone(),
                    method: Method::Classes,
                },
                None => DerangementSearch::NoneExists {
                    method: Method::Classes,
                },
            })
        }
        Err(e) if e.is_resource_limit() => Ok(DerangementSearch::Inconclusive {
            samples: caps.random_samples,
            reason: e.to_string(),
        }),
        Err(e) => Err(e),
    }
}

/// A group of degree `2n` with exactly two orbits, each of length `n`.
#[derive(Clone, Debug)]
pub struct TwoOrbitAction {
    pub group: PermGroup,
    /// The orbits, ordered by smallest point.
    pub orbits: [Vec<usize>; 2],
    pub n: usize,
}

impl TwoOrbitAction {
    pub fn new(group: PermGroup) -> Result<Self> {
        let orbits = group.orbits();
        let lengths: Vec<usize> = orbits.iter().map(Vec::len).collect();
        if orbits.len() != 2 || lengths[0] != lengths[1] {
            return Err(Error::NotTwoOrbit(format!("orbit lengths {lengths:?}")));
        }
        let n = lengths[0];
        let mut it = orbits.into_iter();
        Ok(Self {
            group,
            orbits: [it.next().unwrap(), it.next().unwrap()],
            n,
        })
    }

    /// The transitive group induced on orbit `i`, relabelled to `0..n`.
    pub fn induced(&self, i: usize) -> PermGroup {
        self.group.induced_action(&self.orbits[i]).unwrap()
    }

    pub fn all_points(&self) -> Vec<usize> {
        (0..self.group.degree()).collect()
    }
}

/// Which conclusion a Sylow certificate establishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SylowVerdict {
    /// `b >= p`: no conclusion is claimed.
    HypothesisNotApplicable,
    /// `b < p`, `k > 1`: `2b` orbits of length `p^k`.
    EqualOrbits,
    /// `b < p`, `k = 1`, `b >= (p+1)/2`: elementary abelian with the
    /// stabilizer and dimension bounds.
    ElementaryAbelian,
    /// `b < (p+1)/2`, `k = 1`: `P` contains a derangement.
    DerangementInSylow,
}

impl fmt::Display for SylowVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SylowVerdict::HypothesisNotApplicable => "hypothesis-not-applicable",
            SylowVerdict::EqualOrbits => "equal-orbits",
            SylowVerdict::ElementaryAbelian => "elementary-abelian",
            SylowVerdict::DerangementInSylow => "derangement-in-sylow",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SylowCertificate {
    pub prime: u64,
    /// `n = b p^k` with `p` not dividing `b`.
    pub b: u64,
    pub k: u32,
    /// Orbit lengths of `P` on all `2n` points, ascending.
    pub orbit_lengths: Vec<usize>,
    pub elementary_abelian: bool,
    /// Number of distinct point stabilizers `P_ω`.
    pub stabilizer_count: usize,
    /// `|P| = p^d`.
    pub d: u32,
    pub derangement_witness: Option<Permutation>,
    pub verdict: SylowVerdict,
    /// Claimed conclusions that did not hold; empty for a valid certificate.
    pub failures: Vec<String>,
}

impl SylowCertificate {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All generators have order `p` and commute pairwise.
pub fn is_elementary_abelian(group: &PermGroup, p: u64) -> bool {
    let gens: Vec<&Permutation> = group
        .generators()
        .iter()
        .filter(|g| !g.is_identity())
        .collect();
    gens.iter().all(|g| g.order() == p)
        && gens
            .iter()
            .enumerate()
            .all(|(i, g)| gens[i + 1..].iter().all(|h| (*g * *h) == (*h * *g)))
}

/// Number of distinct point stabilizers of `group` over `points`.
pub fn distinct_point_stabilizers(group: &PermGroup, points: &[usize]) -> Result<usize> {
    let mut distinct: Vec<PermGroup> = Vec::new();
    for &x in points {
        let s = group.point_stabilizer(x)?;
        if !distinct.iter().any(|t| t.same_group(&s)) {
            distinct.push(s);
        }
    }
    Ok(distinct.len())
}

pub fn sylow_certificate(
    action: &TwoOrbitAction,
    p: u64,
    caps: &Caps,
    seed: u64,
) -> Result<SylowCertificate> {
    let n = action.n as u64;
    if !is_prime(p) || n % p != 0 {
        return Err(Error::InvalidArgument(format!(
            "{p} is not a prime dividing n = {n}"
        )));
    }
    let mut b = n;
    let mut k = 0;
    while b % p == 0 {
        b /= p;
        k += 1;
    }
    let sylow = sylow_subgroup(&action.group, p, caps)?;
    let pgroup = &sylow.subgroup;
    let mut orbit_lengths: Vec<usize> = pgroup.orbits().iter().map(Vec::len).collect();
    orbit_lengths.sort_unstable();
    let order = pgroup.order();
    let mut d = 0;
    let mut rest = order.clone();
    let bp = BigUint::from(p);
    while rest > BigUint::one() {
        rest /= &bp;
        d += 1;
    }
    debug_assert_eq!(order, p_part(&action.group.order(), p));
    let points = action.all_points();
    let elementary_abelian = is_elementary_abelian(pgroup, p);
    let stabilizer_count = distinct_point_stabilizers(pgroup, &points)?;
    let search = find_derangement(pgroup, &points, seed, caps)?;
    let derangement_witness = search.witness().cloned();

    let verdict = if b >= p {
        SylowVerdict::HypothesisNotApplicable
    } else if k > 1 {
        SylowVerdict::EqualOrbits
    } else if 2 * b < p + 1 {
        SylowVerdict::DerangementInSylow
    } else {
        SylowVerdict::ElementaryAbelian
    };

    let mut failures = Vec::new();
    if b < p {
        let pk = p.pow(k) as usize;
        if orbit_lengths.len() as u64 != 2 * b || orbit_lengths.iter().any(|&l| l != pk) {
            failures.push(format!(
                "expected {} orbits of length {pk}, found {orbit_lengths:?}",
                2 * b
            ));
        }
        if k == 1 {
            if !elementary_abelian {
                failures.push("Sylow subgroup is not elementary abelian".into());
            }
            if stabilizer_count as u64 > 2 * b {
                failures.push(format!(
                    "{stabilizer_count} distinct point stabilizers exceed {}",
                    2 * b
                ));
            }
            match &search {
                DerangementSearch::NoneExists { .. } => {
                    let upper = stabilizer_count as i64 - p as i64 + 1;
                    if d < 2 || d as i64 > upper {
                        failures.push(format!(
                            "dimension {d} outside [2, {upper}] without a derangement"
                        ));
                    }
                }
                DerangementSearch::Inconclusive { reason, .. } => {
                    failures.push(format!("derangement search inconclusive: {reason}"));
                }
                DerangementSearch::Found { .. } => {}
            }
            if verdict == SylowVerdict::DerangementInSylow && derangement_witness.is_none() {
                failures.push("no derangement found in the Sylow subgroup".into());
            }
        }
    }

    Ok(SylowCertificate {
        prime: p,
        b,
        k,
        orbit_lengths,
        elementary_abelian,
        stabilizer_count,
        d,
        derangement_witness,
        verdict,
        failures,
    })
}

/// The argument covering the two-orbit problem for a given `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseLabel {
    PrimePower,
    /// `n = p^2`.
    EqualPrimes,
    /// `n = pq`, `p > q`, `q` does not divide `p - 1`.
    QNotDividingPMinusOne,
    /// `n = 6`, settled by direct computation.
    Computations,
    /// `n = pq`, `q <= (p - 1)/2`.
    QAtMostHalfPMinusOne,
    NotCovered,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::PrimePower => "prime-power",
            CaseLabel::EqualPrimes => "p-equals-q",
            CaseLabel::QNotDividingPMinusOne => "q-not-dividing-p-minus-1",
            CaseLabel::Computations => "computations",
            CaseLabel::QAtMostHalfPMinusOne => "q-at-most-half-p-minus-1",
            CaseLabel::NotCovered => "not-covered",
        })
    }
}

fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        while n % d == 0 {
            out.push(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Routes `n` to the argument that covers it. Products of two primes are
/// checked first, so `p^2` is reported as the equal-primes case.
pub fn classify_case(n: u64) -> Result<CaseLabel> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "n = {n} must be at least 2"
        )));
    }
    let f = factorize(n);
    if f.len() == 2 {
        let (q, p) = (f[0], f[1]);
        return Ok(if p == q {
            CaseLabel::EqualPrimes
        } else if (p - 1) % q != 0 {
            CaseLabel::QNotDividingPMinusOne
        } else if q == p - 1 {
            CaseLabel::Computations
        } else {
            CaseLabel::QAtMostHalfPMinusOne
        });
    }
    if f.iter().all(|&x| x == f[0]) {
        return Ok(CaseLabel::PrimePower);
    }
    Ok(CaseLabel::NotCovered)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    #[test]
    fn derangement_predicate() {
        assert!(!is_derangement(&Permutation::identity(3), &[0]));
        let g = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        assert!(is_derangement(&g, &all(4)));
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        assert!(!is_derangement(&t, &all(3)));
    }

    #[test]
    fn counts_and_proportions() {
        let caps = Caps::default();
        assert_eq!(
            count_nonderangements(&PermGroup::trivial(3), &all(3), &caps, 0).unwrap(),
            BigUint::one()
        );
        let s4 = PermGroup::symmetric(4);
        assert_eq!(
            count_nonderangements(&s4, &all(4), &caps, 0).unwrap(),
            BigUint::from(15u32)
        );
        assert_eq!(
            count_nonderangements_by_enumeration(&s4, &all(4), 100).unwrap(),
            BigUint::from(15u32)
        );
        assert_eq!(
            count_nonderangements(&PermGroup::cyclic(5), &all(5), &caps, 0).unwrap(),
            BigUint::one()
        );
        let v = pndr(&s4, &all(4), &caps, 0).unwrap();
        assert_eq!(v.to_rational(), BigRational::new(5.into(), 8.into()));
        assert_eq!(v.to_string(), "15/24");
        let one = pndr(&PermGroup::trivial(1), &[0], &caps, 0).unwrap();
        assert_eq!(one.to_rational(), BigRational::one());
        assert!(matches!(
            count_nonderangements(&PermGroup::cyclic(4), &[0, 1], &caps, 0),
            Err(Error::NotInvariant)
        ));
    }

    #[test]
    fn pair_bound_examples() {
        let a = PndrValue::new(15u32.into(), 24u32.into());
        assert_eq!(
            pndr_pair_bound(&a, &a),
            BigRational::new(5.into(), 4.into())
        );
        let third = PndrValue::new(1u32.into(), 3u32.into());
        let half = PndrValue::new(1u32.into(), 2u32.into());
        assert_eq!(
            pndr_pair_bound(&third, &half),
            BigRational::new(5.into(), 6.into())
        );
        assert_eq!(
            pndr_pair_bound(&PndrValue::zero(), &half),
            half.to_rational()
        );
    }

    #[test]
    fn pndr_serializes_as_strings() {
        let a = PndrValue::new(15u32.into(), 24u32.into());
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"den":"24","num":"15"}"#
        );
    }

    #[test]
    fn derangement_search() {
        let caps = Caps::default();
        let s4 = PermGroup::symmetric(4);
        let found = find_derangement(&s4, &all(4), 1, &caps).unwrap();
        assert!(is_derangement(found.witness().unwrap(), &all(4)));
        assert_eq!(
            find_derangement(&PermGroup::trivial(2), &all(2), 1, &caps).unwrap(),
            DerangementSearch::NoneExists {
                method: Method::Enumeration
            }
        );
        let t = PermGroup::from_cycles(3, &[&[&[0, 1]]]).unwrap();
        assert!(matches!(
            find_derangement(&t, &all(3), 1, &caps).unwrap(),
            DerangementSearch::NoneExists { .. }
        ));
        // same seed, same witness
        assert_eq!(
            find_derangement(&s4, &all(4), 9, &caps).unwrap(),
            find_derangement(&s4, &all(4), 9, &caps).unwrap()
        );
    }

    #[test]
    fn search_is_inconclusive_when_nothing_exhaustive_fits() {
        let caps = Caps {
            enumeration: 10,
            class_order: BigUint::from(10u32),
            random_samples: 5,
            ..Caps::default()
        };
        // the only derangements of S2 x S2 x ... on the union miss with few samples
        let t = PermGroup::from_cycles(
            6,
            &[
                &[&[0, 1]],
                &[&[2, 3]],
                &[&[4, 5]],
                &[&[0, 2, 4], &[1, 3, 5]],
            ],
        )
        .unwrap();
        let r = find_derangement(&t, &[0, 1, 2, 3, 4, 5], 3, &caps).unwrap();
        assert!(matches!(
            r,
            DerangementSearch::Inconclusive { .. }
                | DerangementSearch::Found {
                    method: Method::Random,
                    ..
                }
        ));
        let fix = PermGroup::from_cycles(3, &[&[&[0, 1]]]).unwrap();
        let caps = Caps {
            enumeration: 1,
            class_order: BigUint::from(1u32),
            random_samples: 5,
            ..Caps::default()
        };
        assert!(matches!(
            find_derangement(&fix, &all(3), 3, &caps).unwrap(),
            DerangementSearch::Inconclusive { .. }
        ));
    }

    #[test]
    fn two_orbit_actions() {
        let g = PermGroup::from_cycles(4, &[&[&[0, 1], &[2, 3]]]).unwrap();
        let a = TwoOrbitAction::new(g).unwrap();
        assert_eq!(a.n, 2);
        assert_eq!(a.orbits, [vec![0, 1], vec![2, 3]]);
        assert!(TwoOrbitAction::new(PermGroup::cyclic(4)).is_err());
        assert!(
            TwoOrbitAction::new(PermGroup::from_cycles(5, &[&[&[0, 1], &[2, 3, 4]]]).unwrap())
                .is_err()
        );
    }

    #[test]
    fn case_routing() {
        assert_eq!(classify_case(6).unwrap(), CaseLabel::Computations);
        assert_eq!(classify_case(15).unwrap(), CaseLabel::QNotDividingPMinusOne);
        assert_eq!(classify_case(8).unwrap(), CaseLabel::PrimePower);
        assert_eq!(classify_case(7).unwrap(), CaseLabel::PrimePower);
        assert_eq!(classify_case(9).unwrap(), CaseLabel::EqualPrimes);
        assert_eq!(classify_case(10).unwrap(), CaseLabel::QAtMostHalfPMinusOne);
        assert_eq!(classify_case(21).unwrap(), CaseLabel::QAtMostHalfPMinusOne);
        assert_eq!(classify_case(12).unwrap(), CaseLabel::NotCovered);
        assert!(classify_case(1).is_err());
    }

    fn diagonal(g: &PermGroup) -> PermGroup {
        let gens = g.generators().iter().map(|x| x.direct_sum(x)).collect();
        PermGroup::new(2 * g.degree(), gens).unwrap()
    }

    #[test]
    fn sylow_certificates() {
        let caps = Caps::default();
        // S3 wr S2 on 6 points, doubled diagonally: n = 6, p = 3, b = 2
        let w = PermGroup::from_cycles(
            6,
            &[&[&[0, 1, 2]], &[&[0, 1]], &[&[0, 3], &[1, 4], &[2, 5]]],
        )
        .unwrap();
        let a = TwoOrbitAction::new(diagonal(&w)).unwrap();
        let c = sylow_certificate(&a, 3, &caps, 0).unwrap();
        assert_eq!(c.orbit_lengths, vec![3, 3, 3, 3]);
        assert_eq!(c.verdict, SylowVerdict::ElementaryAbelian);
        assert!(c.elementary_abelian);
        assert!(c.holds(), "{:?}", c.failures);

        // D10 on 10 points doubled: n = 10, p = 5, b = 2
        let d = PermGroup::from_cycles(
            10,
            &[
                &[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]],
                &[&[1, 9], &[2, 8], &[3, 7], &[4, 6]],
            ],
        )
        .unwrap();
        let a = TwoOrbitAction::new(diagonal(&d)).unwrap();
        let c = sylow_certificate(&a, 5, &caps, 0).unwrap();
        assert_eq!(c.verdict, SylowVerdict::DerangementInSylow);
        let w = c.derangement_witness.clone().unwrap();
        assert!(is_derangement(&w, &a.all_points()));
        assert!(c.holds());

        // n = 4, p = 2: b = 1 < 2, k = 2
        let a = TwoOrbitAction::new(diagonal(&PermGroup::cyclic(4))).unwrap();
        let c = sylow_certificate(&a, 2, &caps, 0).unwrap();
        assert_eq!((c.b, c.k, c.verdict), (1, 2, SylowVerdict::EqualOrbits));
        assert!(c.holds());

        // n = 6, p = 2: b = 3 >= 2
        let a = TwoOrbitAction::new(diagonal(&w_six())).unwrap();
        let c = sylow_certificate(&a, 2, &caps, 0).unwrap();
        assert_eq!(c.verdict, SylowVerdict::HypothesisNotApplicable);
        assert!(sylow_certificate(&a, 5, &caps, 0).is_err());
    }

    fn w_six() -> PermGroup {
        PermGroup::cyclic(6)
    }
}
