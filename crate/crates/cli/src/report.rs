//! Report assembly, canonical JSON, and plain-text tables.

use std::fmt::Write as _;

use ctrace::ktheory::{is_three_sphere, CANDIDATE_NOTE, RATIONAL_EQUIVALENCE_NOTE};
use ctrace::spaces::UNIT_LABEL;
use ctrace::{
    based_free_split, rational_homotopy, rational_k_theory, sigma_image, AlgebraSpec,
    BigradedElement, CohomologyProfile, InducedEndomorphism, KProfile, PiProfile, QMatrix,
    SigmaImage,
};
use serde_json::{json, Value};

pub const DEGREE_ZERO_NOTE: &str = "total degree 0 counts path components of the unitary \
     group (rationalized); the identity component accounts for degrees >= 1 only";

/// Everything the `pi`, `split`, `ktheory` and `sigma` subcommands print.
#[derive(Clone, Debug)]
pub struct Report {
    pub spec: AlgebraSpec,
    pub pi: PiProfile,
    /// `(based, free)`, absent for disconnected spaces.
    pub split: Option<(PiProfile, PiProfile)>,
    pub k: KProfile,
    pub sigma: SigmaImage,
    pub notes: Vec<String>,
}

impl Report {
    pub fn build(spec: &AlgebraSpec) -> ctrace::Result<Report> {
        let pi = rational_homotopy(spec);
        let k = rational_k_theory(spec)?;
        let sigma = sigma_image(&pi, &k)?;
        let split = based_free_split(spec).ok();

        let mut notes = vec![DEGREE_ZERO_NOTE.to_string(), CANDIDATE_NOTE.to_string()];
        if is_three_sphere(spec.space()) || !spec.dd_trivial() {
            notes.push(RATIONAL_EQUIVALENCE_NOTE.to_string());
        }
        notes.push(k.stable_period_note().to_string());

        Ok(Report {
            spec: spec.clone(),
            pi,
            split,
            k,
            sigma,
            notes,
        })
    }

    /// Canonical JSON; object keys come out sorted.
    pub fn to_json(&self) -> Value {
        let pi: Vec<Value> = self
            .pi
            .by_total_degree()
            .into_iter()
            .map(|(d, elements)| {
                json!({
                    "total_degree": d,
                    "dim": elements.len(),
                    "basis": elements.iter().map(|e| element_json(e)).collect::<Vec<_>>(),
                })
            })
            .collect();
        let split = match &self.split {
            Some((based, free)) => json!({ "based": based.labels(), "free": free.labels() }),
            None => Value::Null,
        };
        let sigma: Vec<Value> = self
            .sigma
            .hits()
            .map(|h| {
                json!({
                    "k_degree": h.k_degree,
                    "labels": h.labels,
                    "target_dim": h.target_dim,
                })
            })
            .collect();
        json!({
            "space": space_json(self.spec.space()),
            "n": self.spec.n(),
            "pi": pi,
            "split": split,
            "k": {
                "even": self.k.even(),
                "odd": self.k.odd(),
                "dd_trivial": self.k.dd_trivial(),
            },
            "sigma": sigma,
            "notes": self.notes,
        })
    }

    pub fn render_pi(&self, style: Style) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}",
            style.bold(&format!(
                "rational homotopy of U(A) for X = {}, n = {}",
                self.spec.space().name(),
                self.spec.n()
            ))
        );
        out.push_str(&element_table(&self.pi, style));
        self.render_notes(&mut out, style);
        out
    }

    pub fn render_split(&self, style: Style) -> String {
        let mut out = String::new();
        match &self.split {
            Some((based, free)) => {
                let _ = writeln!(
                    out,
                    "{}",
                    style.bold("based part (reduced cohomology, kernel of evaluation)")
                );
                out.push_str(&element_table(based, style));
                let _ = writeln!(
                    out,
                    "{}",
                    style.bold("free part (constant maps, image of the section)")
                );
                out.push_str(&element_table(free, style));
            }
            None => {
                let _ = writeln!(out, "no basepoint split: the space is not connected");
            }
        }
        out
    }

    pub fn render_k(&self, style: Style) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}",
            style.bold(&format!(
                "rational K-theory for X = {} ({} Dixmier-Douady class)",
                self.spec.space().name(),
                if self.k.dd_trivial() {
                    "trivial"
                } else {
                    "nonzero"
                }
            ))
        );
        let _ = writeln!(out, "{}", style.bold(&format!("{:>4}  {:>4}", "j", "dim")));
        for j in 0..=self.k_range() {
            let _ = writeln!(out, "{j:>4}  {:>4}", self.k.dim(j));
        }
        let _ = writeln!(out, "{}", self.k.stable_period_note());
        out
    }

    pub fn render_sigma(&self, style: Style) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}",
            style.bold(&format!(
                "stabilization image for X = {}, n = {}",
                self.spec.space().name(),
                self.spec.n()
            ))
        );
        let _ = writeln!(
            out,
            "{}",
            style.bold(&format!("{:>4}  {:>6}  classes", "K_j", "target"))
        );
        for hit in self.sigma.hits() {
            let labels: Vec<String> = hit.labels.iter().map(|l| pretty_label(l)).collect();
            let mut line = format!(
                "{:>4}  {:>6}  {}",
                hit.k_degree,
                hit.target_dim,
                labels.join(", ")
            );
            if hit.target_vanishes() {
                line.push_str("  (target vanishes)");
            }
            let _ = writeln!(out, "{line}");
        }
        let hit_list: Vec<String> = self
            .sigma
            .hit_degrees()
            .into_iter()
            .map(|d| format!("K_{d}"))
            .collect();
        let _ = writeln!(out, "hit degrees: {{{}}}", hit_list.join(", "));
        self.render_notes(&mut out, style);
        out
    }

    fn k_range(&self) -> usize {
        let top = self.sigma.hit_degrees().into_iter().max().unwrap_or(0);
        top.max(2 * self.spec.n()) + 1
    }

    fn render_notes(&self, out: &mut String, style: Style) {
        let _ = writeln!(out, "{}", style.bold("notes:"));
        for note in &self.notes {
            let _ = writeln!(out, "  - {note}");
        }
    }
}

fn element_json(e: &BigradedElement) -> Value {
    json!({ "c": e.cohomology_label(), "p": e.p(), "j": e.j(), "q": e.q() })
}

pub fn space_json(profile: &CohomologyProfile) -> Value {
    let cohomology: serde_json::Map<String, Value> = profile
        .entries()
        .iter()
        .map(|(k, labels)| (k.to_string(), json!(labels)))
        .collect();
    json!({ "name": profile.name(), "cohomology": cohomology })
}

pub fn cohomology_json(profile: &CohomologyProfile) -> Value {
    json!({
        "space": space_json(profile),
        "betti": profile.betti_numbers(),
        "euler_characteristic": profile.euler_characteristic(),
    })
}

pub fn render_cohomology(profile: &CohomologyProfile, style: Style) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", style.bold(&format!("H*({}; Q)", profile.name())));
    for (k, labels) in profile.entries() {
        let _ = writeln!(out, "  b_{k} = {}  [{}]", labels.len(), labels.join(", "));
    }
    let _ = writeln!(
        out,
        "euler characteristic: {}",
        profile.euler_characteristic()
    );
    out
}

fn matrix_json(m: &QMatrix) -> Value {
    Value::Array(
        m.row_vecs()
            .into_iter()
            .map(|row| Value::Array(row.iter().map(|q| Value::String(q.to_string())).collect()))
            .collect(),
    )
}

pub fn endomorphism_json(spec: &AlgebraSpec, phi: &InducedEndomorphism) -> Value {
    let blocks: Vec<Value> = phi
        .blocks()
        .iter()
        .map(|(d, block)| {
            json!({
                "total_degree": d,
                "basis": block.basis.iter().map(BigradedElement::label).collect::<Vec<_>>(),
                "matrix": matrix_json(&block.matrix),
            })
        })
        .collect();
    json!({
        "space": space_json(spec.space()),
        "n": spec.n(),
        "blocks": blocks,
        "identity": phi.is_identity(),
    })
}

pub fn render_endomorphism(spec: &AlgebraSpec, phi: &InducedEndomorphism, style: Style) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}",
        style.bold(&format!(
            "induced endomorphism f* ⊗ 1 for X = {}, n = {}",
            spec.space().name(),
            spec.n()
        ))
    );
    for (d, block) in phi.blocks() {
        let labels: Vec<String> = block
            .basis
            .iter()
            .map(|e| pretty_label(&e.label()))
            .collect();
        let _ = writeln!(out, "degree {d}: basis [{}]", labels.join(", "));
        for line in block.matrix.to_string().lines() {
            let _ = writeln!(out, "  {line}");
        }
    }
    out
}

fn element_table(pi: &PiProfile, style: Style) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}",
        style.bold(&format!("{:>4}  {:>4}  basis (p,q)", "deg", "dim"))
    );
    for (d, elements) in pi.by_total_degree() {
        let cells: Vec<String> = elements
            .iter()
            .map(|e| {
                let (p, q) = e.bidegree();
                format!("{} ({p},{q})", pretty_label(&e.label()))
            })
            .collect();
        let mut line = format!("{d:>4}  {:>4}  {}", elements.len(), cells.join(", "));
        if d == 0 {
            line.push_str("  [component count, rationalized]");
        }
        let _ = writeln!(out, "{line}");
    }
    if pi.is_empty() {
        let _ = writeln!(out, "  (zero)");
    }
    out
}

/// Drops a literal unit factor: `1⊗s_3` prints as `s_3`.
pub fn pretty_label(label: &str) -> String {
    label
        .strip_prefix(UNIT_LABEL)
        .and_then(|rest| rest.strip_prefix(ctrace::spaces::TENSOR_SEP))
        .unwrap_or(label)
        .to_string()
}

/// ANSI emphasis, on or off.
#[derive(Clone, Copy, Debug, Default)]
pub struct Style {
    pub color: bool,
}

impl Style {
    pub fn bold(&self, text: &str) -> String {
        if self.color {
            format!("\x1b[1m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ctrace::builtin_space;

    fn report(name: &str, params: &[&str], n: usize, dd: bool) -> Report {
        let spec = AlgebraSpec::new(builtin_space(name, params).unwrap(), n, dd).unwrap();
        Report::build(&spec).unwrap()
    }

    #[test]
    fn pretty_labels() {
        assert_eq!(pretty_label("1⊗s_3"), "s_3");
        assert_eq!(pretty_label("x_3⊗s_3"), "x_3⊗s_3");
        assert_eq!(pretty_label("1⊗x_1⊗s_1"), "x_1⊗s_1");
        assert_eq!(pretty_label("10⊗s_1"), "10⊗s_1");
    }

    #[test]
    fn sigma_degrees_are_pi_degrees_plus_one() {
        let r = report("cp", &["2"], 3, true);
        let json = r.to_json();
        let pi: Vec<i64> = json["pi"]
            .as_array()
            .unwrap()
            .iter()
            .map(|b| b["total_degree"].as_i64().unwrap())
            .collect();
        let sigma: Vec<i64> = json["sigma"]
            .as_array()
            .unwrap()
            .iter()
            .map(|h| h["k_degree"].as_i64().unwrap())
            .collect();
        assert_eq!(sigma, pi.iter().map(|d| d + 1).collect::<Vec<_>>());
    }

    #[test]
    fn json_round_trips_byte_identically() {
        for r in [
            report("sphere", &["3"], 3, true),
            report("sphere", &["3"], 2, false),
            report("cp", &["2"], 3, true),
            report("point", &[], 4, true),
        ] {
            let text = serde_json::to_string_pretty(&r.to_json()).unwrap();
            let reparsed: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(serde_json::to_string_pretty(&reparsed).unwrap(), text);
            assert!(
                no_floats(&reparsed),
                "no floating point in canonical output"
            );
        }
    }

    fn no_floats(v: &Value) -> bool {
        match v {
            Value::Number(n) => n.is_i64() || n.is_u64(),
            Value::Array(items) => items.iter().all(no_floats),
            Value::Object(map) => map.values().all(no_floats),
            _ => true,
        }
    }

    #[test]
    fn notes_present() {
        let r = report("sphere", &["3"], 2, false);
        assert!(r.notes.iter().any(|n| n == DEGREE_ZERO_NOTE));
        assert!(r.notes.iter().any(|n| n == CANDIDATE_NOTE));
        assert!(r.notes.iter().any(|n| n == RATIONAL_EQUIVALENCE_NOTE));
        let p = report("point", &[], 2, true);
        assert!(!p.notes.iter().any(|n| n == RATIONAL_EQUIVALENCE_NOTE));
    }

    #[test]
    fn styled_output() {
        let plain = Style { color: false };
        let colored = Style { color: true };
        assert_eq!(plain.bold("x"), "x");
        assert_eq!(colored.bold("x"), "\x1b[1mx\x1b[0m");
        let r = report("point", &[], 1, true);
        assert!(!r.render_pi(plain).contains('\x1b'));
        assert!(r.render_pi(colored).contains('\x1b'));
    }
}
