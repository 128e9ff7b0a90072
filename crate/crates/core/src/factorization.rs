//! Positive factorizations of the identity and the moves on them.
//!
//! A factorization `(v1, …, vm)` stands for the product `t_{v1} ⋯ t_{vm}` of
//! right-handed twists in the composition order of [`MappingClassWord`].
//! Letter positions are 0-based throughout.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::mcg::{
    apply_to_curve, curve_equal, expand_twist, is_identity, twists_commute, Curve,
    IdentityCertificate, MappingClassWord, Verdict,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorizationError {
    #[error("factorization does not multiply to the identity (verdict {0:?})")]
    NotIdentity(Verdict),
    #[error("index {index} out of range for {len} letters")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("letters at position {0} do not match the lantern boundary")]
    BoundaryMismatch(usize),
    #[error("lantern configuration fails its checks: {0}")]
    InvalidLantern(String),
    #[error("expected type (4, 3) with 7 letters, found type {found} with {len} letters")]
    WrongSeedType { found: FibrationType, len: usize },
    #[error("seed has no nonseparating letter")]
    NoNonseparatingLetter,
    #[error("phi does not carry a1 to the lantern's b1")]
    PhiMismatch,
    #[error("a1 and phi(a1) are not disjoint")]
    NotDisjoint,
    #[error("derived factorization failed: {0}")]
    DerivedInvalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FibrationType {
    pub n: u64,
    pub s: u64,
}

impl FibrationType {
    pub fn new(n: u64, s: u64) -> Self {
        FibrationType { n, s }
    }

    pub fn letters(self) -> u64 {
        self.n + self.s
    }
}

impl std::ops::Add for FibrationType {
    type Output = FibrationType;
    fn add(self, o: FibrationType) -> FibrationType {
        FibrationType::new(self.n + o.n, self.s + o.s)
    }
}

impl std::fmt::Display for FibrationType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.n, self.s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HurwitzDirection {
    /// `(a, b) ↦ (t_a(b), a)`
    Forward,
    /// `(a, b) ↦ (b, t_b⁻¹(a))`
    Backward,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PositiveFactorization {
    pub letters: Vec<Curve>,
}

impl PositiveFactorization {
    pub fn new(letters: Vec<Curve>) -> Self {
        PositiveFactorization { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The product `t_{v1} ⋯ t_{vm}` as a single word.
    pub fn product(&self) -> MappingClassWord {
        self.letters
            .iter()
            .fold(MappingClassWord::empty(), |acc, c| {
                acc.mul(&expand_twist(c, 1).expect("unit exponent"))
            })
    }

    /// Letters equal one by one up to isotopy.
    pub fn curve_equivalent(&self, other: &PositiveFactorization) -> bool {
        self.len() == other.len()
            && self
                .letters
                .iter()
                .zip(&other.letters)
                .all(|(a, b)| curve_equal(a, b))
    }

    /// SHA-256 over the canonical JSON of the letters.
    pub fn digest(&self) -> String {
        digest_json(&self.letters)
    }
}

pub(crate) fn digest_json<T: Serialize>(value: &T) -> String {
    let bytes = serde_json::to_vec(value).expect("curves serialize");
    let hash = Sha256::digest(&bytes);
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

pub fn type_of(pf: &PositiveFactorization) -> FibrationType {
    let s = pf.letters.iter().filter(|c| c.is_separating()).count() as u64;
    FibrationType::new(pf.len() as u64 - s, s)
}

pub fn verify(pf: &PositiveFactorization) -> IdentityCertificate {
    is_identity(&pf.product())
}

fn require_identity(pf: &PositiveFactorization) -> Result<(), FactorizationError> {
    match verify(pf).verdict {
        Verdict::Identity => Ok(()),
        v => Err(FactorizationError::NotIdentity(v)),
    }
}

/// `(v1..vm) ↦ (v_{k+1}..vm, v1..vk)`, with `k` taken modulo `m`.
pub fn cyclic_permute(pf: &PositiveFactorization, k: usize) -> PositiveFactorization {
    if pf.is_empty() {
        return pf.clone();
    }
    let mut letters = pf.letters.clone();
    letters.rotate_left(k % pf.len());
    PositiveFactorization::new(letters)
}

/// Elementary Hurwitz move on the letters at `i` and `i + 1`.
pub fn hurwitz_move(
    pf: &PositiveFactorization,
    i: usize,
    direction: HurwitzDirection,
) -> Result<PositiveFactorization, FactorizationError> {
    if i + 1 >= pf.len() {
        return Err(FactorizationError::IndexOutOfRange {
            index: i,
            len: pf.len(),
        });
    }
    let (a, b) = (&pf.letters[i], &pf.letters[i + 1]);
    let (first, second) = match direction {
        HurwitzDirection::Forward => (apply_to_curve(&expand_twist(a, 1).unwrap(), b), a.clone()),
        HurwitzDirection::Backward => (b.clone(), apply_to_curve(&expand_twist(b, -1).unwrap(), a)),
    };
    let mut letters = pf.letters.clone();
    letters[i] = first;
    letters[i + 1] = second;
    Ok(PositiveFactorization::new(letters))
}

pub fn global_conjugate(pf: &PositiveFactorization, u: &MappingClassWord) -> PositiveFactorization {
    PositiveFactorization::new(pf.letters.iter().map(|c| apply_to_curve(u, c)).collect())
}

/// Concatenation `pf1 · u(pf2)`.
pub fn fiber_sum(
    pf1: &PositiveFactorization,
    pf2: &PositiveFactorization,
    twist: Option<&MappingClassWord>,
) -> Result<PositiveFactorization, FactorizationError> {
    require_identity(pf1)?;
    require_identity(pf2)?;
    let second = match twist {
        Some(u) => global_conjugate(pf2, u),
        None => pf2.clone(),
    };
    let mut letters = pf1.letters.clone();
    letters.extend(second.letters);
    Ok(PositiveFactorization::new(letters))
}

/// From `(v1, U) = id`: the pair `(U² v1², v1² U²)`.
pub fn square_swap(
    pf: &PositiveFactorization,
) -> Result<(PositiveFactorization, PositiveFactorization), FactorizationError> {
    if pf.is_empty() {
        return Err(FactorizationError::IndexOutOfRange { index: 0, len: 0 });
    }
    require_identity(pf)?;
    let v1 = pf.letters[0].clone();
    let u = &pf.letters[1..];
    let mut first: Vec<Curve> = u.iter().chain(u).cloned().collect();
    first.extend([v1.clone(), v1.clone()]);
    let mut second = vec![v1.clone(), v1];
    second.extend(u.iter().chain(u).cloned());
    Ok((
        PositiveFactorization::new(first),
        PositiveFactorization::new(second),
    ))
}

/// `t_{d1} t_{d2} t_{d3} t_{d4} = t_x t_y t_z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LanternConfig {
    pub boundary: [Curve; 4],
    pub interior: [Curve; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LanternReport {
    pub boundary_commutes: bool,
    pub relation: Verdict,
    /// x and z nonseparating, y separating
    pub classification: bool,
}

impl LanternReport {
    pub fn passes(&self) -> bool {
        self.boundary_commutes && self.relation == Verdict::Identity && self.classification
    }
}

impl LanternConfig {
    pub fn check(&self) -> LanternReport {
        let b = &self.boundary;
        let boundary_commutes = (0..4)
            .all(|i| (i + 1..4).all(|j| curve_equal(&b[i], &b[j]) || twists_commute(&b[i], &b[j])));
        let lhs = PositiveFactorization::new(b.to_vec()).product();
        let rhs = PositiveFactorization::new(self.interior.to_vec()).product();
        let relation = is_identity(&lhs.mul(&rhs.inverse())).verdict;
        let [x, y, z] = &self.interior;
        let classification = !x.is_separating() && y.is_separating() && !z.is_separating();
        LanternReport {
            boundary_commutes,
            relation,
            classification,
        }
    }

    pub fn digest(&self) -> String {
        digest_json(self)
    }
}

/// Replaces the four letters at `position..position+4` (the boundary of
/// `cfg`, in order) with the interior `(x, y, z)`.
pub fn lantern_substitute(
    pf: &PositiveFactorization,
    position: usize,
    cfg: &LanternConfig,
) -> Result<PositiveFactorization, FactorizationError> {
    if position + 4 > pf.len() {
        return Err(FactorizationError::IndexOutOfRange {
            index: position,
            len: pf.len(),
        });
    }
    let report = cfg.check();
    if !report.passes() {
        return Err(FactorizationError::InvalidLantern(format!("{report:?}")));
    }
    let window = &pf.letters[position..position + 4];
    if !window
        .iter()
        .zip(&cfg.boundary)
        .all(|(a, d)| curve_equal(a, d))
    {
        return Err(FactorizationError::BoundaryMismatch(position));
    }
    let mut letters = pf.letters[..position].to_vec();
    letters.extend(cfg.interior.iter().cloned());
    letters.extend(pf.letters[position + 4..].iter().cloned());
    Ok(PositiveFactorization::new(letters))
}

/// The doubling construction from a `(4, 3)` seed: rotate so the first
/// letter `a1` is nonseparating, square-swap, conjugate the second half by
/// `φ`, concatenate `U² a1² b1² V²` and substitute the lantern in the middle.
pub fn derive_14_13(
    pf43: &PositiveFactorization,
    phi: &MappingClassWord,
    cfg: &LanternConfig,
) -> Result<PositiveFactorization, FactorizationError> {
    let ty = type_of(pf43);
    if ty != FibrationType::new(4, 3) || pf43.len() != 7 {
        return Err(FactorizationError::WrongSeedType {
            found: ty,
            len: pf43.len(),
        });
    }
    require_identity(pf43)?;
    let k = pf43
        .letters
        .iter()
        .position(|c| !c.is_separating())
        .ok_or(FactorizationError::NoNonseparatingLetter)?;
    let rotated = cyclic_permute(pf43, k);
    let a1 = rotated.letters[0].clone();
    let b1 = apply_to_curve(phi, &a1);
    let report = cfg.check();
    if !report.passes() {
        return Err(FactorizationError::InvalidLantern(format!("{report:?}")));
    }
    let expected = [&a1, &a1, &b1, &b1];
    if !curve_equal(&b1, &cfg.boundary[2]) {
        return Err(FactorizationError::PhiMismatch);
    }
    if !expected
        .iter()
        .zip(&cfg.boundary)
        .all(|(c, d)| curve_equal(c, d))
    {
        return Err(FactorizationError::BoundaryMismatch(0));
    }
    if !twists_commute(&a1, &b1) {
        return Err(FactorizationError::NotDisjoint);
    }
    let (first, second) = square_swap(&rotated)?;
    let second = global_conjugate(&second, phi);
    let mut letters = first.letters;
    letters.extend(second.letters);
    let middle = 2 * (rotated.len() - 1);
    let derived = lantern_substitute(&PositiveFactorization::new(letters), middle, cfg)?;
    match verify(&derived).verdict {
        Verdict::Identity => Ok(derived),
        v => Err(FactorizationError::DerivedInvalid(format!("verdict {v:?}"))),
    }
}
