//! ℤ⁺-graded rational K-theory and the stabilization map.
//!
//! K-theory here is indexed by every non-negative integer, not collapsed
//! mod 2. A class of `π_d(UA) ⊗ ℚ` stabilizes into `K_{d+1}(A) ⊗ ℚ`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graded::BigradedElement;
use crate::qlinalg::{QMatrix, Rational};
use crate::spaces::{CohomologyEndomorphism, CohomologyProfile};
use crate::unitary::{rational_homotopy, AlgebraSpec, PiProfile};

pub const STABLE_PERIOD_NOTE: &str =
    "K-theory dimensions repeat with period 2 for j >= 1 (Bott periodicity)";

pub const CANDIDATE_NOTE: &str = "sigma hits are candidate image generators: every class of \
     total degree d is recorded under K_{d+1}; nontriviality is only established for the \
     matrix algebras and the X = S^3 family";

pub const RATIONAL_EQUIVALENCE_NOTE: &str = "for X = S^3 two statements coexist: via the \
     rational equivalence with F(S^3, U_n), K_*(A) ⊗ Q ≅ Q in every degree; for a nonzero \
     Dixmier-Douady class, K_*(A; Q) = 0 because the integral groups are zero or finite \
     cyclic. The Dixmier-Douady setting selects between them; the tension is not resolved here";

/// Dimensions of `K_j(A) ⊗ ℚ` for all `j ≥ 0`: one value for even `j`, one
/// for odd `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KProfile {
    spec: AlgebraSpec,
    even: usize,
    odd: usize,
}

impl KProfile {
    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn dim(&self, j: usize) -> usize {
        if j.is_multiple_of(2) {
            self.even
        } else {
            self.odd
        }
    }

    pub fn even(&self) -> usize {
        self.even
    }

    pub fn odd(&self) -> usize {
        self.odd
    }

    pub fn dd_trivial(&self) -> bool {
        self.spec.dd_trivial()
    }

    pub fn vanishes(&self) -> bool {
        self.even == 0 && self.odd == 0
    }

    pub fn stable_period_note(&self) -> &'static str {
        STABLE_PERIOD_NOTE
    }
}

/// Whether the profile has the rational cohomology of `S³`.
pub fn is_three_sphere(profile: &CohomologyProfile) -> bool {
    profile.betti_numbers() == [1, 0, 0, 1]
}

/// With trivial Dixmier–Douady class, the Chern character gives
/// `dim K_even = Σ b_{2k}` and `dim K_odd = Σ b_{2k+1}`. With a nonzero class
/// only `X = S³` is supported, where rational K-theory vanishes.
pub fn rational_k_theory(spec: &AlgebraSpec) -> Result<KProfile> {
    let (even, odd) = if spec.dd_trivial() {
        spec.space()
            .entries()
            .iter()
            .fold((0, 0), |(e, o), (k, labels)| {
                if k % 2 == 0 {
                    (e + labels.len(), o)
                } else {
                    (e, o + labels.len())
                }
            })
    } else if is_three_sphere(spec.space()) {
        (0, 0)
    } else {
        return Err(Error::Unsupported(format!(
            "rational K-theory with a nonzero Dixmier-Douady class is only established for \
             X = S^3, not {}",
            spec.space().name()
        )));
    };
    Ok(KProfile {
        spec: spec.clone(),
        even,
        odd,
    })
}

/// Classes landing in one K-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaHit {
    pub k_degree: usize,
    pub labels: Vec<String>,
    pub target_dim: usize,
}

impl SigmaHit {
    pub fn target_vanishes(&self) -> bool {
        self.target_dim == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaImage {
    hits: BTreeMap<usize, SigmaHit>,
}

impl SigmaImage {
    pub fn hits(&self) -> impl Iterator<Item = &SigmaHit> {
        self.hits.values()
    }

    pub fn hit(&self, k_degree: usize) -> Option<&SigmaHit> {
        self.hits.get(&k_degree)
    }

    pub fn hit_degrees(&self) -> BTreeSet<usize> {
        self.hits.keys().copied().collect()
    }

    pub fn confidence_note(&self) -> &'static str {
        CANDIDATE_NOTE
    }
}

/// Records every class of total degree `d` under `K_{d+1}`.
pub fn sigma_image(pi: &PiProfile, k: &KProfile) -> Result<SigmaImage> {
    if pi.spec() != k.spec() {
        return Err(Error::InvalidInput(
            "homotopy and K-theory profiles come from different algebras".into(),
        ));
    }
    let mut hits: BTreeMap<usize, SigmaHit> = BTreeMap::new();
    for e in pi.elements() {
        let k_degree = (e.total_degree() + 1) as usize;
        hits.entry(k_degree)
            .or_insert_with(|| SigmaHit {
                k_degree,
                labels: Vec::new(),
                target_dim: k.dim(k_degree),
            })
            .labels
            .push(e.label());
    }
    Ok(SigmaImage { hits })
}

/// One total-degree block of an endomorphism of `π_*(UA) ⊗ ℚ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBlock {
    pub basis: Vec<BigradedElement>,
    pub matrix: QMatrix,
}

/// A degree-preserving endomorphism of `π_*(UA) ⊗ ℚ`, block-diagonal over
/// total degree. Columns are images of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedEndomorphism {
    blocks: BTreeMap<i64, DegreeBlock>,
}

impl InducedEndomorphism {
    pub fn blocks(&self) -> &BTreeMap<i64, DegreeBlock> {
        &self.blocks
    }

    pub fn block(&self, degree: i64) -> Option<&DegreeBlock> {
        self.blocks.get(&degree)
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.values().all(|b| b.matrix.is_identity())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.blocks.len() != other.blocks.len() {
            return Err(Error::Shape("endomorphisms of different profiles".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|(&d, b)| {
                let o = other
                    .blocks
                    .get(&d)
                    .filter(|o| o.basis == b.basis)
                    .ok_or_else(|| Error::Shape(format!("degree {d} bases differ")))?;
                Ok((
                    d,
                    DegreeBlock {
                        basis: b.basis.clone(),
                        matrix: b.matrix.mul(&o.matrix)?,
                    },
                ))
            })
            .collect::<Result<_>>()?;
        Ok(InducedEndomorphism { blocks })
    }
}

/// `f* ⊗ 1`: acts by `f*` on the cohomology factor and trivially on the
/// unitary generator.
pub fn induced_endomorphism(
    f: &CohomologyEndomorphism,
    spec: &AlgebraSpec,
) -> Result<InducedEndomorphism> {
    let space = spec.space();
    let degrees_match = f.blocks().len() == space.entries().len()
        && space.entries().iter().all(|(k, labels)| {
            f.block(*k)
                .is_some_and(|m| m.rows() == labels.len() && m.cols() == labels.len())
        });
    if !degrees_match {
        return Err(Error::Shape(format!(
            "endomorphism blocks do not match the cohomology of {}",
            space.name()
        )));
    }

    let pi = rational_homotopy(spec);
    let mut blocks = BTreeMap::new();
    for (degree, basis) in pi.by_total_degree() {
        let size = basis.len();
        let mut matrix = QMatrix::zeros(size, size);
        for (col, source) in basis.iter().enumerate() {
            let pullback = f.block((-source.p()) as usize).expect("checked above");
            for (row, target) in basis.iter().enumerate() {
                if target.j() == source.j() {
                    let entry: &Rational = pullback.get(target.class_index(), source.class_index());
                    matrix.set(row, col, entry.clone());
                }
            }
        }
        blocks.insert(
            degree,
            DegreeBlock {
                basis: basis.into_iter().cloned().collect(),
                matrix,
            },
        );
    }
    Ok(InducedEndomorphism { blocks })
}

/// Unital *-endomorphisms of `C(X) ⊗ M_n` whose effect on rational
/// homotopy is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraMap {
    /// Induced by a self-map of `X`, given by its action on cohomology.
    Pullback(CohomologyEndomorphism),
    /// Conjugation by a unitary. `U_n` is path-connected, so this is
    /// homotopic to the identity.
    InnerConjugation,
}

/// The action of an algebra map on `π_*(UA) ⊗ ℚ`.
pub fn phi(map: &AlgebraMap, spec: &AlgebraSpec) -> Result<InducedEndomorphism> {
    match map {
        AlgebraMap::Pullback(f) => induced_endomorphism(f, spec),
        AlgebraMap::InnerConjugation => {
            induced_endomorphism(&CohomologyEndomorphism::identity(spec.space()), spec)
        }
    }
}
