//! Rational homotopy of the unitary group of a continuous trace algebra.
//!
//! For an algebra of sections of a bundle of `n × n` matrix algebras over a
//! compact space `X`, the rational homotopy groups of the unitary group are
//! the graded vector space `H*(X;ℚ) ⊗̃ ⟨s_1, s_3, …, s_{2n−1}⟩`, where
//! cohomology sits in degrees ≤ 0 and `⊗̃` keeps basis tensors of total
//! degree ≥ 0. The answer depends on `X` and `n` only.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graded::{
    generator_label, negate_grading, truncated_tensor_terms, BigradedElement, GradedSpace,
};
use crate::spaces::{BuiltinSpace, CohomologyProfile};

/// Largest `n` for which the exterior algebra basis is enumerated.
pub const MAX_EXTERIOR_GENERATORS: usize = 24;

/// The data determining a unital continuous trace algebra up to what the
/// rational computations can see.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    space: CohomologyProfile,
    n: usize,
    dd_trivial: bool,
}

impl AlgebraSpec {
    pub fn new(space: CohomologyProfile, n: usize, dd_trivial: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "matrix size n must be at least 1".into(),
            ));
        }
        if space.betti(0) == 0 {
            return Err(Error::InvalidInput(format!(
                "space {:?} has no degree-0 cohomology",
                space.name()
            )));
        }
        Ok(AlgebraSpec {
            space,
            n,
            dd_trivial,
        })
    }

    /// `M_n(ℂ)`, i.e. the trivial bundle over a point.
    pub fn matrix_algebra(n: usize) -> Result<Self> {
        Self::new(BuiltinSpace::Point.profile(), n, true)
    }

    pub fn space(&self) -> &CohomologyProfile {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dd_trivial(&self) -> bool {
        self.dd_trivial
    }
}

/// Bigraded basis of `π_*(UA) ⊗ ℚ`, sorted by total degree, then `p`
/// descending, then `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiProfile {
    spec: AlgebraSpec,
    elements: Vec<BigradedElement>,
}

impl PiProfile {
    fn from_elements(spec: AlgebraSpec, mut elements: Vec<BigradedElement>) -> Self {
        elements.sort_by_key(|e| (e.total_degree(), Reverse(e.p()), e.j(), e.class_index()));
        PiProfile { spec, elements }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn elements(&self) -> &[BigradedElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn by_total_degree(&self) -> BTreeMap<i64, Vec<&BigradedElement>> {
        let mut out: BTreeMap<i64, Vec<&BigradedElement>> = BTreeMap::new();
        for e in &self.elements {
            out.entry(e.total_degree()).or_default().push(e);
        }
        out
    }

    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.by_total_degree()
            .into_iter()
            .map(|(d, v)| (d, v.len()))
            .collect()
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.elements
            .iter()
            .filter(|e| e.total_degree() == degree)
            .count()
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements.iter().map(BigradedElement::label).collect()
    }

    /// Forgets the bigrading.
    pub fn graded_space(&self) -> GradedSpace {
        GradedSpace::from_elements(self.elements.iter().map(|e| (e.total_degree(), e.label())))
            .expect("bigraded labels are unique")
    }
}

/// `π_*(U_n) ⊗ ℚ = ⟨s_1, s_3, …, s_{2n−1}⟩` with `|s_{2j−1}| = 2j − 1`.
pub fn unitary_generators(n: usize) -> Result<GradedSpace> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "matrix size n must be at least 1".into(),
        ));
    }
    GradedSpace::from_elements((1..=n).map(|j| (2 * j as i64 - 1, generator_label(j))))
}

pub fn rational_homotopy(spec: &AlgebraSpec) -> PiProfile {
    let cohomology = negate_grading(&spec.space);
    let generators = unitary_generators(spec.n).expect("spec has n >= 1");
    let elements = truncated_tensor_terms(&cohomology, &generators)
        .into_iter()
        .map(|t| {
            let j = ((t.right_degree + 1) / 2) as usize;
            let label = &cohomology.labels(t.left_degree)[t.left_index];
            BigradedElement::new(label.clone(), t.left_degree, t.left_index, j)
                .expect("negated cohomology lives in degrees <= 0")
        })
        .collect();
    PiProfile::from_elements(spec.clone(), elements)
}

/// Splits `π_*` along evaluation at the basepoint: the free part is the
/// image of constant maps (classes `1 ⊗ s`), the based part comes from
/// reduced cohomology. Requires a connected space (`b₀ = 1`).
pub fn based_free_split(spec: &AlgebraSpec) -> Result<(PiProfile, PiProfile)> {
    let b0 = spec.space.betti(0);
    if b0 != 1 {
        return Err(Error::InvalidInput(format!(
            "basepoint split needs a connected space, but b_0 = {b0}"
        )));
    }
    let (free, based): (Vec<_>, Vec<_>) = rational_homotopy(spec)
        .elements
        .into_iter()
        .partition(|e| e.p() == 0);
    Ok((
        PiProfile::from_elements(spec.clone(), based),
        PiProfile::from_elements(spec.clone(), free),
    ))
}

/// Dimension in total degree 0, the rationalized count of path components.
pub fn pi_zero_dimension(spec: &AlgebraSpec) -> usize {
    rational_homotopy(spec).dim(0)
}

/// `H_*(U_n;ℚ) = Λ(g_1, g_3, …, g_{2n−1})`, one basis monomial per subset
/// of generators. Labels concatenate generators in increasing order, e.g.
/// `g_1g_5`; the empty monomial is `1`.
pub fn exterior_homology(n: usize) -> Result<GradedSpace> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "matrix size n must be at least 1".into(),
        ));
    }
    if n > MAX_EXTERIOR_GENERATORS {
        return Err(Error::InvalidInput(format!(
            "exterior algebra on {n} generators is too large to enumerate"
        )));
    }
    let mut basis: BTreeMap<i64, Vec<String>> = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        let chosen: Vec<usize> = (1..=n).filter(|j| mask & (1 << (j - 1)) != 0).collect();
        let degree: i64 = chosen.iter().map(|&j| 2 * j as i64 - 1).sum();
        let label = if chosen.is_empty() {
            "1".to_string()
        } else {
            chosen.iter().map(|&j| hurewicz_label(j)).collect()
        };
        basis.entry(degree).or_default().push(label);
    }
    GradedSpace::new(basis)
}

fn hurewicz_label(j: usize) -> String {
    format!("g_{}", 2 * j - 1)
}

/// Image of the rational Hurewicz map `s_{2j−1} ↦ g_{2j−1}`: the
/// generators, not their products.
pub fn hurewicz_image(n: usize) -> Result<GradedSpace> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "matrix size n must be at least 1".into(),
        ));
    }
    GradedSpace::from_elements((1..=n).map(|j| (2 * j as i64 - 1, hurewicz_label(j))))
}

/// The Hurewicz map on basis labels, `(s_q, g_q)` pairs.
pub fn hurewicz_map(n: usize) -> Vec<(String, String)> {
    (1..=n)
        .map(|j| (generator_label(j), hurewicz_label(j)))
        .collect()
}
