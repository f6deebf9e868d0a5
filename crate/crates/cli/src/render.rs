use rootlat_core::certifier::CertifyReport;
use rootlat_core::discriminant::DiscriminantGroup;
use rootlat_core::reduction::{ReductionTrace, TraceVerdict};
use rootlat_core::small_vectors::SmallVectorReport;
use rootlat_core::tables::VerificationReport;
use rootlat_core::vector::format_rational;
use rootlat_core::{CompositeLattice, IrreducibleRootLattice, Lattice, OrbitSummary};
use serde::Serialize;
use serde_json::json;

use crate::Format;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

pub fn gram(l: &CompositeLattice, format: Format) -> String {
    match format {
        Format::Json => to_json(&json!({
            "lattice": l.name(),
            "rank": l.rank(),
            "labels": l.labels(),
            "gram": l.gram(),
            "abs_determinant": l.abs_determinant().to_string(),
        })),
        Format::Text => {
            let width = l.labels().iter().map(String::len).max().unwrap_or(1).max(2);
            let mut out = format!("{}  rank {}  |det| {}\n", l.name(), l.rank(), l.abs_determinant());
            out.push_str(&format!("{:width$} ", ""));
            for label in l.labels() {
                out.push_str(&format!(" {label:>width$}"));
            }
            out.push('\n');
            for (label, row) in l.labels().iter().zip(l.gram()) {
                out.push_str(&format!("{label:width$} "));
                for x in row {
                    out.push_str(&format!(" {x:>width$}"));
                }
                out.push('\n');
            }
            out
        }
    }
}

fn disc_line(g: &DiscriminantGroup) -> String {
    let mut parts = vec![g.shape()];
    parts.extend(
        g.generators
            .iter()
            .map(|x| format!("{}: {}", x.label, format_rational(&x.square))),
    );
    parts.join("; ")
}

pub fn disc(l: &CompositeLattice, format: Format) -> String {
    let groups = l.discriminant_groups();
    match format {
        Format::Json => {
            let comps: Vec<_> = l
                .components()
                .iter()
                .zip(&groups)
                .map(|(c, g)| {
                    json!({
                        "lattice": c.name(),
                        "group": g.shape(),
                        "invariant_factors": g.invariant_factors,
                        "generators": g.generators.iter().map(|x| json!({
                            "label": x.label,
                            "vector": x.vector,
                            "square": format_rational(&x.square),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            to_json(&json!({ "lattice": l.name(), "components": comps }))
        }
        Format::Text => {
            if let [g] = groups.as_slice() {
                return format!("{}\n", disc_line(g));
            }
            l.components()
                .iter()
                .zip(&groups)
                .map(|(c, g)| format!("{}: {}\n", c.name(), disc_line(g)))
                .collect()
        }
    }
}

pub fn shortvec(r: &SmallVectorReport, format: Format) -> String {
    match format {
        Format::Json => to_json(&r.to_json()),
        Format::Text => {
            let mut out = format!(
                "{}  k={}  value {}  orbits {}\n",
                r.lattice,
                r.k,
                format_rational(&r.norm_value),
                r.orbits.len()
            );
            for (o, outside) in r.orbits.iter().zip(&r.in_dual_minus_lattice) {
                out.push_str(&format!(
                    "  {:<12} size {:<6} {}  sample {}\n",
                    o.generator_label,
                    o.size,
                    if *outside { "dual\\lattice" } else { "lattice     " },
                    o.representative
                ));
            }
            out
        }
    }
}

pub fn orbit(l: &CompositeLattice, o: &OrbitSummary, format: Format) -> String {
    match format {
        Format::Json => to_json(&json!({
            "lattice": l.name(),
            "generator": o.generator_label,
            "size": o.size,
            "representative": o.representative,
            "elements": o.elements,
        })),
        Format::Text => {
            let mut out = format!(
                "{}  orbit of size {}  generator {}  representative {}\n",
                l.name(),
                o.size,
                o.generator_label,
                o.representative
            );
            for e in o.elements.iter().flatten() {
                out.push_str(&format!("  {e}\n"));
            }
            out
        }
    }
}

pub fn trace(l: &IrreducibleRootLattice, t: &ReductionTrace, verdict: &TraceVerdict, format: Format) -> String {
    match format {
        Format::Json => to_json(t),
        Format::Text => {
            let square = l.square(&t.start).map(|s| format_rational(&s)).unwrap_or_default();
            let mut out = format!("{}  start {}  square {}\n", t.lattice, t.start, square);
            for (i, s) in t.steps.iter().enumerate() {
                out.push_str(&format!(
                    "  step {}: subtract {} -> {}\n",
                    i + 1,
                    l.label(s.vertex),
                    s.vector
                ));
            }
            out.push_str(&format!("  end {}^ = {}\n", t.end_vertex, t.end));
            out.push_str(&match verdict.reason {
                None => "  verified\n".to_string(),
                Some(r) => format!("  verification failed: {r}\n"),
            });
            out
        }
    }
}

pub fn certify(r: &CertifyReport, format: Format) -> String {
    match format {
        Format::Json => to_json(r),
        Format::Text => {
            let mut out = format!(
                "{}  target {}  candidates {}  certified {}  failures {}\n",
                r.lattice,
                r.target,
                r.n_candidates,
                r.n_certified,
                r.failures.len()
            );
            out.push_str(&format!(
                "  reflection steps: total {}, max per candidate {}\n",
                r.total_steps, r.max_steps
            ));
            for c in &r.classes {
                out.push_str(&format!("  class {:<16} {}\n", c.class, c.count));
                for p in &c.patterns {
                    out.push_str(&format!("    squares ({})  {}\n", p.squares.join(", "), p.count));
                }
            }
            out
        }
    }
}

pub fn verification(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => to_json(r),
        Format::Text => r.render_text(),
    }
}
