//! ℤ-graded vector spaces with labeled bases.
//!
//! Only the vector-space level is modeled: tensor products, the truncated
//! tensor product that keeps basis tensors of total degree ≥ 0, and
//! Poincaré series as Laurent polynomials with integer coefficients.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::spaces::{CohomologyProfile, TENSOR_SEP};

/// Finitely supported map from degree to a list of basis labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedSpace {
    basis: BTreeMap<i64, Vec<String>>,
}

impl GradedSpace {
    /// Labels must be unique across all degrees. Empty degrees are dropped.
    pub fn new(basis: BTreeMap<i64, Vec<String>>) -> Result<Self> {
        let mut seen = HashSet::new();
        for label in basis.values().flatten() {
            if !seen.insert(label.as_str()) {
                return Err(Error::InvalidInput(format!(
                    "basis label {label:?} used twice"
                )));
            }
        }
        Ok(Self::from_map(basis))
    }

    pub fn from_elements<I, S>(elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, S)>,
        S: Into<String>,
    {
        let mut basis: BTreeMap<i64, Vec<String>> = BTreeMap::new();
        for (d, label) in elements {
            basis.entry(d).or_default().push(label.into());
        }
        Self::new(basis)
    }

    fn from_map(basis: BTreeMap<i64, Vec<String>>) -> Self {
        GradedSpace {
            basis: basis.into_iter().filter(|(_, v)| !v.is_empty()).collect(),
        }
    }

    pub fn basis(&self) -> &BTreeMap<i64, Vec<String>> {
        &self.basis
    }

    pub fn labels(&self, degree: i64) -> &[String] {
        self.basis.get(&degree).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.labels(degree).len()
    }

    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.basis.iter().map(|(&d, v)| (d, v.len())).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.basis.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// `(degree, label)` pairs in degree order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &str)> {
        self.basis
            .iter()
            .flat_map(|(&d, v)| v.iter().map(move |l| (d, l.as_str())))
    }
}

/// Cohomology regraded into non-positive degrees: `Hᵏ` sits in degree `−k`.
pub fn negate_grading(profile: &CohomologyProfile) -> GradedSpace {
    GradedSpace::from_map(
        profile
            .entries()
            .iter()
            .map(|(&k, labels)| (-(k as i64), labels.clone()))
            .collect(),
    )
}

/// One basis tensor `a ⊗ b`, identified by degree and position of each factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorTerm {
    pub left_degree: i64,
    pub left_index: usize,
    pub right_degree: i64,
    pub right_index: usize,
}

impl TensorTerm {
    pub fn degree(&self) -> i64 {
        self.left_degree + self.right_degree
    }
}

/// All basis tensors of `v ⊗ w`, left factor outermost.
pub fn tensor_terms(v: &GradedSpace, w: &GradedSpace) -> Vec<TensorTerm> {
    let mut terms = Vec::with_capacity(v.total_dim() * w.total_dim());
    for (&ld, left) in &v.basis {
        for li in 0..left.len() {
            for (&rd, right) in &w.basis {
                for ri in 0..right.len() {
                    terms.push(TensorTerm {
                        left_degree: ld,
                        left_index: li,
                        right_degree: rd,
                        right_index: ri,
                    });
                }
            }
        }
    }
    terms
}

/// Basis tensors of `v ⊗ w` with total degree ≥ 0.
pub fn truncated_tensor_terms(v: &GradedSpace, w: &GradedSpace) -> Vec<TensorTerm> {
    tensor_terms(v, w)
        .into_iter()
        .filter(|t| t.degree() >= 0)
        .collect()
}

fn assemble(v: &GradedSpace, w: &GradedSpace, terms: Vec<TensorTerm>) -> GradedSpace {
    let mut basis: BTreeMap<i64, Vec<String>> = BTreeMap::new();
    for t in terms {
        let label = format!(
            "{}{TENSOR_SEP}{}",
            v.labels(t.left_degree)[t.left_index],
            w.labels(t.right_degree)[t.right_index]
        );
        basis.entry(t.degree()).or_default().push(label);
    }
    GradedSpace::from_map(basis)
}

/// `v ⊗ w` graded by `|a ⊗ b| = |a| + |b|`, labels `a⊗b`.
pub fn tensor(v: &GradedSpace, w: &GradedSpace) -> GradedSpace {
    assemble(v, w, tensor_terms(v, w))
}

/// `v ⊗̃ w`: the part of `v ⊗ w` in degrees ≥ 0 (degree 0 included).
pub fn truncated_tensor(v: &GradedSpace, w: &GradedSpace) -> GradedSpace {
    assemble(v, w, truncated_tensor_terms(v, w))
}

/// Integer Laurent polynomial in `t`; only nonzero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coefficients: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coefficient: i64, degree: i64) -> Self {
        Self::from_terms([(degree, coefficient)])
    }

    /// Sums repeated degrees.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut coefficients = BTreeMap::new();
        for (d, c) in terms {
            *coefficients.entry(d).or_insert(0) += c;
        }
        coefficients.retain(|_, c| *c != 0);
        LaurentPoly { coefficients }
    }

    pub fn coefficient(&self, degree: i64) -> i64 {
        self.coefficients.get(&degree).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &BTreeMap<i64, i64> {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        Self::from_terms(self.coefficients.iter().flat_map(|(&a, &x)| {
            other
                .coefficients
                .iter()
                .map(move |(&b, &y)| (a + b, x * y))
        }))
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        Self::from_terms(
            self.coefficients
                .iter()
                .chain(&other.coefficients)
                .map(|(&d, &c)| (d, c)),
        )
    }

    pub fn non_negative_part(&self) -> LaurentPoly {
        LaurentPoly {
            coefficients: self
                .coefficients
                .range(0..)
                .map(|(&d, &c)| (d, c))
                .collect(),
        }
    }

    /// Value at `t = 1`.
    pub fn sum_coefficients(&self) -> i64 {
        self.coefficients.values().sum()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&d, &c)) in self.coefficients.iter().enumerate() {
            let magnitude = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let power = match d {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{d}"),
            };
            match (magnitude, power.is_empty()) {
                (_, true) => write!(f, "{magnitude}")?,
                (1, false) => f.write_str(&power)?,
                _ => write!(f, "{magnitude}{power}")?,
            }
        }
        Ok(())
    }
}

/// `P(V) = Σ dim(V_d) t^d`.
pub fn poincare_series(v: &GradedSpace) -> LaurentPoly {
    LaurentPoly::from_terms(v.basis.iter().map(|(&d, l)| (d, l.len() as i64)))
}

/// Basis element `c ⊗ s_q` of cohomology tensored with the unitary
/// generators, carrying its bidegree `(p, q)` with `p = −deg c ≤ 0` and
/// `q = 2j − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BigradedElement {
    cohomology_label: String,
    cohomology_degree: i64,
    class_index: usize,
    generator_index: usize,
}

impl BigradedElement {
    /// `class_index` is the position of the class within its cohomology degree.
    pub fn new(
        cohomology_label: impl Into<String>,
        cohomology_degree: i64,
        class_index: usize,
        generator_index: usize,
    ) -> Result<Self> {
        if cohomology_degree > 0 {
            return Err(Error::InvalidInput(format!(
                "cohomology degree {cohomology_degree} must be <= 0"
            )));
        }
        if generator_index == 0 {
            return Err(Error::InvalidInput("generator index starts at 1".into()));
        }
        Ok(BigradedElement {
            cohomology_label: cohomology_label.into(),
            cohomology_degree,
            class_index,
            generator_index,
        })
    }

    pub fn cohomology_label(&self) -> &str {
        &self.cohomology_label
    }

    /// `p`, the (non-positive) cohomological degree.
    pub fn p(&self) -> i64 {
        self.cohomology_degree
    }

    /// Position of the class within its cohomology degree.
    pub fn class_index(&self) -> usize {
        self.class_index
    }

    /// `j` in `s_{2j−1}`.
    pub fn j(&self) -> usize {
        self.generator_index
    }

    /// `q = 2j − 1`.
    pub fn q(&self) -> i64 {
        2 * self.generator_index as i64 - 1
    }

    pub fn bidegree(&self) -> (i64, i64) {
        (self.p(), self.q())
    }

    pub fn total_degree(&self) -> i64 {
        self.p() + self.q()
    }

    pub fn generator_label(&self) -> String {
        generator_label(self.generator_index)
    }

    /// Canonical label `c⊗s_q`; the unit class is never elided here.
    pub fn label(&self) -> String {
        format!(
            "{}{TENSOR_SEP}{}",
            self.cohomology_label,
            self.generator_label()
        )
    }
}

impl fmt::Display for BigradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@({},{})", self.label(), self.p(), self.q())
    }
}

/// `s_{2j−1}`.
pub fn generator_label(j: usize) -> String {
    format!("s_{}", 2 * j - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::BuiltinSpace;
    use proptest::prelude::*;

    fn space(elements: &[(i64, &str)]) -> GradedSpace {
        GradedSpace::from_elements(elements.iter().map(|&(d, l)| (d, l))).unwrap()
    }

    fn s135() -> GradedSpace {
        space(&[(1, "s_1"), (3, "s_3"), (5, "s_5")])
    }

    #[test]
    fn negate_examples() {
        let pt = negate_grading(&BuiltinSpace::Point.profile());
        assert_eq!(pt, space(&[(0, "1")]));
        let s3 = negate_grading(&BuiltinSpace::Sphere(3).profile());
        assert_eq!(s3, space(&[(0, "1"), (-3, "x_3")]));
        let cp2 = negate_grading(&BuiltinSpace::ComplexProjective(2).profile());
        assert_eq!(
            cp2.basis().keys().copied().collect::<Vec<_>>(),
            vec![-4, -2, 0]
        );
    }

    #[test]
    fn labels_must_be_unique() {
        assert!(GradedSpace::from_elements([(0, "a"), (1, "a")]).is_err());
    }

    #[test]
    fn tensor_examples() {
        let unit = space(&[(0, "u")]);
        let w = space(&[(1, "s_1"), (3, "s_3")]);
        let uw = tensor(&unit, &w);
        assert_eq!(uw.dims(), w.dims());
        assert_eq!(uw.labels(3), ["u⊗s_3"]);

        let x = space(&[(-3, "x_3")]);
        let xw = tensor(&x, &w);
        assert_eq!(xw, space(&[(-2, "x_3⊗s_1"), (0, "x_3⊗s_3")]));

        let s3 = space(&[(0, "1"), (-3, "x_3")]);
        let dims = tensor(&s3, &s135()).dims();
        assert_eq!(
            dims,
            BTreeMap::from([(-2, 1), (0, 1), (1, 1), (2, 1), (3, 1), (5, 1)])
        );
    }

    #[test]
    fn truncated_tensor_examples() {
        let s3 = space(&[(0, "1"), (-3, "x_3")]);
        let t = truncated_tensor(&s3, &s135());
        assert_eq!(
            t,
            space(&[
                (1, "1⊗s_1"),
                (3, "1⊗s_3"),
                (5, "1⊗s_5"),
                (0, "x_3⊗s_3"),
                (2, "x_3⊗s_5"),
            ])
        );
        assert!(t.iter().all(|(_, l)| l != "x_3⊗s_1"));

        let pt = space(&[(0, "1")]);
        assert_eq!(truncated_tensor(&pt, &s135()).dims(), s135().dims());

        let y = space(&[(-5, "y")]);
        let w = space(&[(1, "s_1"), (3, "s_3")]);
        assert!(truncated_tensor(&y, &w).is_empty());
    }

    #[test]
    fn poincare_examples() {
        let w = space(&[(1, "s_1"), (3, "s_3")]);
        assert_eq!(
            poincare_series(&w),
            LaurentPoly::from_terms([(1, 1), (3, 1)])
        );
        assert_eq!(poincare_series(&w).to_string(), "t + t^3");

        let s3 = negate_grading(&BuiltinSpace::Sphere(3).profile());
        assert_eq!(
            poincare_series(&s3),
            LaurentPoly::from_terms([(0, 1), (-3, 1)])
        );
        assert_eq!(poincare_series(&s3).to_string(), "t^-3 + 1");

        let t = truncated_tensor(&s3, &s135());
        assert_eq!(
            poincare_series(&t),
            LaurentPoly::from_terms([(0, 1), (1, 1), (2, 1), (3, 1), (5, 1)])
        );
        assert_eq!(poincare_series(&t).to_string(), "1 + t + t^2 + t^3 + t^5");
    }

    #[test]
    fn laurent_display_signs() {
        let p = LaurentPoly::from_terms([(-1, -2), (0, 3), (2, -1)]);
        assert_eq!(p.to_string(), "-2t^-1 + 3 - t^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(
            LaurentPoly::from_terms([(1, 1), (1, -1)]),
            LaurentPoly::zero()
        );
    }

    #[test]
    fn bigraded_element_degrees() {
        let e = BigradedElement::new("c^2", -4, 0, 3).unwrap();
        assert_eq!(e.bidegree(), (-4, 5));
        assert_eq!(e.total_degree(), 1);
        assert_eq!(e.label(), "c^2⊗s_5");
        assert_eq!(e.to_string(), "c^2⊗s_5@(-4,5)");
        assert!(BigradedElement::new("x", 2, 0, 1).is_err());
        assert!(BigradedElement::new("x", 0, 0, 0).is_err());
    }

    fn small_space(prefix: &'static str) -> impl Strategy<Value = GradedSpace> {
        proptest::collection::btree_map(-6i64..=6, 1usize..=3, 0..=4).prop_map(move |dims| {
            let basis = dims
                .into_iter()
                .map(|(d, n)| (d, (0..n).map(|i| format!("{prefix}{d}_{i}")).collect()))
                .collect();
            GradedSpace::new(basis).unwrap()
        })
    }

    proptest! {
        #[test]
        fn poincare_is_multiplicative(v in small_space("v"), w in small_space("w")) {
            prop_assert_eq!(
                poincare_series(&tensor(&v, &w)),
                poincare_series(&v).mul(&poincare_series(&w))
            );
        }

        #[test]
        fn truncation_keeps_non_negative_part(v in small_space("v"), w in small_space("w")) {
            let t = truncated_tensor(&v, &w);
            prop_assert_eq!(
                poincare_series(&t),
                poincare_series(&v).mul(&poincare_series(&w)).non_negative_part()
            );
            prop_assert!(t.iter().all(|(d, _)| d >= 0));
        }

        #[test]
        fn tensor_commutes_dimensionwise(v in small_space("v"), w in small_space("w")) {
            prop_assert_eq!(tensor(&v, &w).dims(), tensor(&w, &v).dims());
        }
    }
}
