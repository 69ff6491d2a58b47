//! Compact spaces as finite simplicial complexes or as cohomology profiles.
//!
//! Rational Čech cohomology of a finite complex is computed as simplicial
//! cohomology. Spaces whose cohomology is already known (spheres, complex
//! projective spaces, products of those) are described directly by a
//! [`CohomologyProfile`] and never triangulated.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::qlinalg::{QMatrix, Rational};

/// Label of the unit class in degree 0.
pub const UNIT_LABEL: &str = "1";

/// Separator used for composed basis labels, e.g. `x_3⊗s_5`.
pub const TENSOR_SEP: &str = "⊗";

/// A validated finite simplicial complex.
///
/// Vertices are kept sorted by label, so a simplex stored as a sorted list
/// of vertex indices compares lexicographically exactly as its sorted label
/// tuple would. Every face of every facet is enumerated up front.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Vec<usize>>,
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Validates and normalizes a complex given by its vertex labels and
    /// facets. Duplicate facets collapse; the faces are the downward
    /// closure of the facets.
    pub fn new<V, F, S>(vertices: V, facets: F) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        F: IntoIterator<Item = S>,
        S: IntoIterator,
        S::Item: Into<String>,
    {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::InvalidInput("duplicate vertex label".into()));
        }
        let index: HashMap<&str, usize> = sorted
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();

        let mut normalized = BTreeSet::new();
        for facet in facets {
            let mut ids = Vec::new();
            for v in facet {
                let v: String = v.into();
                match index.get(v.as_str()) {
                    Some(&i) => ids.push(i),
                    None => {
                        return Err(Error::InvalidInput(format!(
                            "facet references unknown vertex {v:?}"
                        )))
                    }
                }
            }
            ids.sort_unstable();
            ids.dedup();
            if ids.is_empty() {
                return Err(Error::InvalidInput("empty facet".into()));
            }
            if ids.len() > 24 {
                return Err(Error::InvalidInput(format!(
                    "facet with {} vertices is too large to enumerate",
                    ids.len()
                )));
            }
            normalized.insert(ids);
        }
        if normalized.is_empty() {
            return Err(Error::InvalidInput("complex has no facets".into()));
        }
        let covered: HashSet<usize> = normalized.iter().flatten().copied().collect();
        if let Some(lonely) = (0..sorted.len()).find(|i| !covered.contains(i)) {
            return Err(Error::InvalidInput(format!(
                "vertex {:?} lies in no facet",
                sorted[lonely]
            )));
        }

        let top = normalized.iter().map(Vec::len).max().unwrap_or(0);
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); top];
        for facet in &normalized {
            let n = facet.len();
            for mask in 1u32..(1u32 << n) {
                let face: Vec<usize> = (0..n)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| facet[b])
                    .collect();
                by_dim[face.len() - 1].insert(face);
            }
        }

        Ok(SimplicialComplex {
            vertices: sorted,
            facets: normalized.into_iter().collect(),
            simplices: by_dim
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
        })
    }

    /// Boundary of the `dim`-simplex on vertices `v0..v{dim}`, a
    /// triangulated `(dim-1)`-sphere.
    pub fn simplex_boundary(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput(
                "the 0-simplex has empty boundary".into(),
            ));
        }
        let vertices: Vec<String> = (0..=dim).map(|i| format!("v{i}")).collect();
        let facets: Vec<Vec<String>> = (0..=dim)
            .map(|skip| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        SimplicialComplex::new(vertices, facets)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Normalized facets as sorted vertex-index lists.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn dimension(&self) -> usize {
        self.simplices.len() - 1
    }

    /// The `k`-simplices in lexicographic order.
    pub fn simplices(&self, k: usize) -> &[Vec<usize>] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn simplex_count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn simplex_labels(&self, simplex: &[usize]) -> Vec<&str> {
        simplex.iter().map(|&i| self.vertices[i].as_str()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum((0..=self.dimension()).map(|k| self.simplex_count(k)))
    }

    /// Matrix of `δᵏ : Cᵏ → Cᵏ⁺¹`; rows index (k+1)-simplices, columns
    /// k-simplices. The entry for a (k+1)-simplex and its face obtained by
    /// deleting the i-th vertex is `(-1)^i`.
    pub fn coboundary_matrix(&self, k: usize) -> QMatrix {
        let lower = self.simplices(k);
        let upper = self.simplices(k + 1);
        let mut m = QMatrix::zeros(upper.len(), lower.len());
        if upper.is_empty() || lower.is_empty() {
            return m;
        }
        let position: HashMap<&[usize], usize> = lower
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let mut face = Vec::with_capacity(k + 1);
        for (row, simplex) in upper.iter().enumerate() {
            for drop in 0..simplex.len() {
                face.clear();
                face.extend(
                    simplex
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != drop)
                        .map(|(_, &v)| v),
                );
                let col = position[face.as_slice()];
                let sign = if drop % 2 == 0 { 1 } else { -1 };
                m.set(row, col, Rational::from(sign));
            }
        }
        m
    }

    /// Betti numbers `bₖ = dim ker δᵏ − rank δᵏ⁻¹`, for k = 0..=dim.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.dimension())
            .map(|k| self.coboundary_matrix(k).rank())
            .collect();
        (0..=self.dimension())
            .map(|k| {
                let cocycles = self.simplex_count(k) - ranks[k];
                let coboundaries = if k == 0 { 0 } else { ranks[k - 1] };
                cocycles - coboundaries
            })
            .collect()
    }

    /// Rational cohomology with generated labels `h{k}_{i}`; a connected
    /// complex gets the label `1` in degree 0.
    pub fn cohomology(&self, name: impl Into<String>) -> CohomologyProfile {
        let entries = self
            .betti_numbers()
            .into_iter()
            .enumerate()
            .filter(|&(_, b)| b > 0)
            .map(|(k, b)| {
                let labels = if k == 0 && b == 1 {
                    vec![UNIT_LABEL.to_string()]
                } else {
                    (0..b).map(|i| format!("h{k}_{i}")).collect()
                };
                (k, labels)
            })
            .collect();
        CohomologyProfile {
            name: name.into(),
            entries,
        }
    }
}

fn alternating_sum(counts: impl Iterator<Item = usize>) -> i64 {
    counts
        .enumerate()
        .map(|(k, n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
        .sum()
}

/// Labeled basis of `H*(X;ℚ)`, stored in non-negative degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyProfile {
    name: String,
    entries: BTreeMap<usize, Vec<String>>,
}

impl CohomologyProfile {
    /// Empty degrees are dropped. Labels must be nonempty and unique.
    pub fn new(name: impl Into<String>, entries: BTreeMap<usize, Vec<String>>) -> Result<Self> {
        let mut seen = HashSet::new();
        for label in entries.values().flatten() {
            if label.is_empty() {
                return Err(Error::InvalidInput("empty basis label".into()));
            }
            if !seen.insert(label.as_str()) {
                return Err(Error::InvalidInput(format!(
                    "basis label {label:?} used twice"
                )));
            }
        }
        Ok(CohomologyProfile {
            name: name.into(),
            entries: entries.into_iter().filter(|(_, v)| !v.is_empty()).collect(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn entries(&self) -> &BTreeMap<usize, Vec<String>> {
        &self.entries
    }

    pub fn labels(&self, k: usize) -> &[String] {
        self.entries.get(&k).map_or(&[], Vec::as_slice)
    }

    pub fn betti(&self, k: usize) -> usize {
        self.labels(k).len()
    }

    /// `b₀, …, b_top`, with zeros filled in; empty for the empty profile.
    pub fn betti_numbers(&self) -> Vec<usize> {
        match self.top_degree() {
            Some(top) => (0..=top).map(|k| self.betti(k)).collect(),
            None => Vec::new(),
        }
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn total_dimension(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(self.betti_numbers().into_iter())
    }

    pub fn label_index(&self, k: usize, label: &str) -> Option<usize> {
        self.labels(k).iter().position(|l| l == label)
    }
}

impl fmt::Display for CohomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H*({}) = ", self.name)?;
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(k, labels)| format!("{k}: [{}]", labels.join(", ")))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Spaces whose cohomology is known in closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuiltinSpace {
    Point,
    Sphere(usize),
    ComplexProjective(usize),
    Product(Box<BuiltinSpace>, Box<BuiltinSpace>),
}

impl BuiltinSpace {
    /// Parses `point`, `sphere K`, `cp M` or `product A.. B..` from
    /// whitespace-separated tokens. Products nest: `product sphere 1
    /// product sphere 1 sphere 1` is the 3-torus.
    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let tokens: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
        let (space, rest) = Self::parse_prefix(&tokens)?;
        if !rest.is_empty() {
            return Err(Error::InvalidInput(format!(
                "unexpected builtin parameters: {}",
                rest.join(" ")
            )));
        }
        Ok(space)
    }

    fn parse_prefix<'a>(tokens: &'a [&'a str]) -> Result<(Self, &'a [&'a str])> {
        let Some((&name, rest)) = tokens.split_first() else {
            return Err(Error::InvalidInput("missing builtin space name".into()));
        };
        let positive = |rest: &'a [&'a str], what: &str| -> Result<(usize, &'a [&'a str])> {
            let Some((&raw, rest)) = rest.split_first() else {
                return Err(Error::InvalidInput(format!("{name} needs a {what}")));
            };
            match raw.parse::<usize>() {
                Ok(v) if v >= 1 => Ok((v, rest)),
                _ => Err(Error::InvalidInput(format!(
                    "{name}: {what} must be a positive integer, got {raw:?}"
                ))),
            }
        };
        match name.to_ascii_lowercase().as_str() {
            "point" => Ok((BuiltinSpace::Point, rest)),
            "sphere" => {
                let (k, rest) = positive(rest, "dimension")?;
                Ok((BuiltinSpace::Sphere(k), rest))
            }
            "cp" => {
                let (m, rest) = positive(rest, "complex dimension")?;
                Ok((BuiltinSpace::ComplexProjective(m), rest))
            }
            "product" => {
                let (a, rest) = Self::parse_prefix(rest)?;
                let (b, rest) = Self::parse_prefix(rest)?;
                Ok((BuiltinSpace::Product(Box::new(a), Box::new(b)), rest))
            }
            _ => Err(Error::InvalidInput(format!(
                "unknown builtin space {name:?} (expected point, sphere, cp or product)"
            ))),
        }
    }

    pub fn display_name(&self) -> String {
        match self {
            BuiltinSpace::Point => "point".into(),
            BuiltinSpace::Sphere(k) => format!("S^{k}"),
            BuiltinSpace::ComplexProjective(m) => format!("CP^{m}"),
            BuiltinSpace::Product(a, b) => {
                let wrap = |s: &BuiltinSpace| match s {
                    BuiltinSpace::Product(..) => format!("({})", s.display_name()),
                    _ => s.display_name(),
                };
                format!("{} x {}", wrap(a), wrap(b))
            }
        }
    }

    pub fn profile(&self) -> CohomologyProfile {
        let name = self.display_name();
        let entries = match self {
            BuiltinSpace::Point => BTreeMap::from([(0, vec![UNIT_LABEL.to_string()])]),
            BuiltinSpace::Sphere(k) => BTreeMap::from([
                (0, vec![UNIT_LABEL.to_string()]),
                (*k, vec![format!("x_{k}")]),
            ]),
            BuiltinSpace::ComplexProjective(m) => (0..=*m)
                .map(|i| {
                    let label = match i {
                        0 => UNIT_LABEL.to_string(),
                        1 => "c".to_string(),
                        _ => format!("c^{i}"),
                    };
                    (2 * i, vec![label])
                })
                .collect(),
            BuiltinSpace::Product(a, b) => return kunneth(&a.profile(), &b.profile()),
        };
        CohomologyProfile { name, entries }
    }
}

/// Profile of a builtin space from its name and parameters.
pub fn builtin_space<S: AsRef<str>>(name: &str, params: &[S]) -> Result<CohomologyProfile> {
    let mut tokens = vec![name];
    tokens.extend(params.iter().map(AsRef::as_ref));
    Ok(BuiltinSpace::parse(&tokens)?.profile())
}

/// Rational Künneth product: `Hᵏ(X×Y) = ⊕ Hⁱ(X) ⊗ Hᵏ⁻ⁱ(Y)`, labels `u⊗v`.
pub fn kunneth(a: &CohomologyProfile, b: &CohomologyProfile) -> CohomologyProfile {
    let mut entries: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (i, left) in &a.entries {
        for (j, right) in &b.entries {
            let slot = entries.entry(i + j).or_default();
            for u in left {
                for v in right {
                    slot.push(format!("{u}{TENSOR_SEP}{v}"));
                }
            }
        }
    }
    let wrap = |n: &str| {
        if n.contains(" x ") {
            format!("({n})")
        } else {
            n.to_string()
        }
    };
    CohomologyProfile {
        name: format!("{} x {}", wrap(&a.name), wrap(&b.name)),
        entries,
    }
}

/// A degree-preserving linear self-map of `H*(X;ℚ)`, one square block per
/// nonzero degree, acting on the profile's labeled basis. Columns are the
/// images of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyEndomorphism {
    blocks: BTreeMap<usize, QMatrix>,
}

impl CohomologyEndomorphism {
    pub fn identity(profile: &CohomologyProfile) -> Self {
        CohomologyEndomorphism {
            blocks: profile
                .entries
                .iter()
                .map(|(&k, labels)| (k, QMatrix::identity(labels.len())))
                .collect(),
        }
    }

    /// Degrees missing from `blocks` act as the identity. A block given for
    /// a degree where the profile is zero must be 0x0.
    pub fn new(profile: &CohomologyProfile, blocks: BTreeMap<usize, QMatrix>) -> Result<Self> {
        let mut out = Self::identity(profile);
        for (k, m) in blocks {
            let b = profile.betti(k);
            if m.rows() != b || m.cols() != b {
                return Err(Error::Shape(format!(
                    "degree {k} block is {}x{}, but b_{k} = {b}",
                    m.rows(),
                    m.cols()
                )));
            }
            if b > 0 {
                out.blocks.insert(k, m);
            }
        }
        Ok(out)
    }

    pub fn blocks(&self) -> &BTreeMap<usize, QMatrix> {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> Option<&QMatrix> {
        self.blocks.get(&k)
    }

    /// `self ∘ other`, blockwise.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.blocks.len() != other.blocks.len() || self.blocks.keys().ne(other.blocks.keys()) {
            return Err(Error::Shape(
                "endomorphisms act on different profiles".into(),
            ));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|(&k, m)| Ok((k, m.mul(&other.blocks[&k])?)))
            .collect::<Result<_>>()?;
        Ok(CohomologyEndomorphism { blocks })
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.values().all(QMatrix::is_identity)
    }

    /// Whether the unit class in degree 0 is sent to itself, as it is for
    /// maps induced by basepoint-preserving maps of a connected space.
    pub fn fixes_unit(&self, profile: &CohomologyProfile) -> bool {
        let Some(unit) = profile.label_index(0, UNIT_LABEL) else {
            return false;
        };
        let block = &self.blocks[&0];
        (0..block.rows()).all(|r| {
            let v = block.get(r, unit);
            if r == unit {
                v.is_one()
            } else {
                v.is_zero()
            }
        })
    }
}
