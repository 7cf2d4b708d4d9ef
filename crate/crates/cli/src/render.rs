//! Output formatting. Everything is buffered so `--output` and stdout share
//! one code path.

use serde::Serialize;
use serde_json::json;
use tricyclic_core::energy::{EnergyComparison, EnergyReport};
use tricyclic_core::enumerate::{ClassCount, ClassMember};
use tricyclic_core::io::{to_graph6, GraphJson};
use tricyclic_core::poly::{BSeq, IntPoly};
use tricyclic_core::quasiorder::{QuasiOrd, Relation};
use tricyclic_core::verify::{ScanReport, VerifyReport};
use tricyclic_core::Graph;

use crate::{CliError, Format, Result};

#[derive(Debug, Default)]
pub struct Out {
    buf: String,
    header: bool,
}

fn unsupported(fmt: Format, what: &str) -> CliError {
    let name = match fmt {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Graph6 => "graph6",
        Format::Human => "human",
    };
    CliError::Usage(format!("format {name} is not available for {what}"))
}

fn csv_line<I, S>(fields: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(fields).expect("writing to memory");
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("fields are UTF-8")
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("output serializes");
    s.push('\n');
    s
}

fn joined<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl Out {
    pub fn text(&self) -> &str {
        &self.buf
    }

    fn push(&mut self, s: &str) {
        self.buf.push_str(s);
    }

    fn header_once(&mut self, fields: &[&str]) {
        if !self.header {
            self.header = true;
            let line = csv_line(fields);
            self.push(&line);
        }
    }

    pub fn graph(&mut self, fmt: Format, spec: &str, g: &Graph) -> Result<()> {
        match fmt {
            Format::Graph6 => {
                let line = format!("{}\n", to_graph6(g));
                self.push(&line);
            }
            Format::Json => {
                let line = json_line(&json!({"spec": spec, "graph6": to_graph6(g), "graph": GraphJson::from(g)}));
                self.push(&line);
            }
            Format::Csv => {
                self.header_once(&["spec", "u", "v"]);
                for (u, v) in g.edges() {
                    let line = csv_line([spec.to_string(), u.to_string(), v.to_string()]);
                    self.push(&line);
                }
            }
            Format::Human => {
                let edges = g.edges().map(|(u, v)| format!("{u}-{v}"));
                let line = format!("{spec}: {} vertices, {} edges\n  {}\n", g.order(), g.size(), joined(edges));
                self.push(&line);
            }
        }
        Ok(())
    }

    pub fn charpoly(&mut self, fmt: Format, spec: &str, p: &IntPoly) -> Result<()> {
        match fmt {
            Format::Human => {
                let line = format!("{p}\n");
                self.push(&line);
            }
            Format::Json => {
                let line = json_line(&json!({"spec": spec, "charpoly": p, "display": p.to_string()}));
                self.push(&line);
            }
            Format::Csv => {
                self.header_once(&["spec", "degree", "coefficients"]);
                let line = csv_line([spec.to_string(), p.degree().to_string(), joined(p.coeffs())]);
                self.push(&line);
            }
            Format::Graph6 => return Err(unsupported(fmt, "charpoly")),
        }
        Ok(())
    }

    pub fn bseq(&mut self, fmt: Format, spec: &str, b: &BSeq) -> Result<()> {
        match fmt {
            Format::Human => {
                let line = format!("{b}\n");
                self.push(&line);
            }
            Format::Json => {
                let line = json_line(&json!({"spec": spec, "bseq": b}));
                self.push(&line);
            }
            Format::Csv => {
                self.header_once(&["spec", "n", "b"]);
                let line = csv_line([spec.to_string(), b.n.to_string(), joined(&b.b)]);
                self.push(&line);
            }
            Format::Graph6 => return Err(unsupported(fmt, "bseq")),
        }
        Ok(())
    }

    pub fn energy(&mut self, fmt: Format, r: &EnergyReport) -> Result<()> {
        match fmt {
            Format::Json => {
                let line = json_line(r);
                self.push(&line);
            }
            Format::Csv => {
                self.header_once(&["spec", "energy_lo", "energy_hi", "method"]);
                let line = csv_line([
                    r.spec.clone(),
                    format!("{:.17e}", r.energy_lo),
                    format!("{:.17e}", r.energy_hi),
                    r.method.clone(),
                ]);
                self.push(&line);
            }
            Format::Human => {
                let line = format!(
                    "{}: E in [{:.12}, {:.12}] ({})\n",
                    r.spec, r.energy_lo, r.energy_hi, r.method
                );
                self.push(&line);
            }
            Format::Graph6 => return Err(unsupported(fmt, "energy")),
        }
        Ok(())
    }

    pub fn compare_header(&mut self, fmt: Format) -> Result<()> {
        match fmt {
            Format::Csv => self.header_once(&[
                "spec1",
                "spec2",
                "relation",
                "first_witness_index",
                "energy_order",
            ]),
            Format::Graph6 => return Err(unsupported(fmt, "compare")),
            _ => {}
        }
        Ok(())
    }

    pub fn compare(
        &mut self,
        fmt: Format,
        s1: &str,
        s2: &str,
        q: &QuasiOrd,
        energy: Option<&EnergyComparison>,
    ) -> Result<()> {
        match fmt {
            Format::Json => {
                let mut v = json!({
                    "spec1": s1,
                    "spec2": s2,
                    "relation": q.relation,
                    "first_witness_index": q.first_witness(),
                });
                if let Some(e) = energy {
                    v["energy"] = json!({
                        "order": e.order,
                        "e1": [e.e1.lo_f64(), e.e1.hi_f64()],
                        "e2": [e.e2.lo_f64(), e.e2.hi_f64()],
                    });
                }
                let line = json_line(&v);
                self.push(&line);
            }
            Format::Csv => {
                let line = csv_line([
                    s1.to_string(),
                    s2.to_string(),
                    q.relation.to_string(),
                    q.first_witness().map(|i| i.to_string()).unwrap_or_default(),
                    energy.map(|e| e.order.to_string()).unwrap_or_default(),
                ]);
                self.push(&line);
            }
            Format::Human => {
                let mut line = format!("{s1} {} {s2}", q.relation.symbol());
                if let Some(i) = q.first_witness() {
                    line.push_str(&format!(" (first difference at b_{})", 2 * i));
                }
                if let Some(e) = energy {
                    line.push_str(&format!("; energy {}: {} vs {}", e.order, e.e1, e.e2));
                }
                line.push('\n');
                self.push(&line);
            }
            Format::Graph6 => return Err(unsupported(fmt, "compare")),
        }
        Ok(())
    }

    pub fn class_counts(&mut self, fmt: Format, counts: &[ClassCount]) -> Result<()> {
        match fmt {
            Format::Json => {
                for c in counts {
                    let line = json_line(c);
                    self.push(&line);
                }
            }
            Format::Csv => {
                self.header_once(&["n", "kind", "a", "b", "k", "central", "planted"]);
                for c in counts {
                    let line = csv_line([
                        c.n.to_string(),
                        c.kind.clone(),
                        c.cycles[0].to_string(),
                        c.cycles[1].to_string(),
                        c.cycles[2].to_string(),
                        c.central.to_string(),
                        c.planted.to_string(),
                    ]);
                    self.push(&line);
                }
            }
            Format::Human => {
                for c in counts {
                    let line = format!(
                        "n={} {} ({},{},{}): {} central, {} planted\n",
                        c.n, c.kind, c.cycles[0], c.cycles[1], c.cycles[2], c.central, c.planted
                    );
                    self.push(&line);
                }
            }
            Format::Graph6 => return Err(unsupported(fmt, "enumerate --summary")),
        }
        Ok(())
    }

    pub fn members(&mut self, fmt: Format, members: &[ClassMember]) -> Result<()> {
        match fmt {
            Format::Graph6 => {
                for m in members {
                    let line = format!("{}\n", to_graph6(&m.graph));
                    self.push(&line);
                }
            }
            Format::Json => {
                for m in members {
                    let line = json_line(&json!({
                        "graph6": to_graph6(&m.graph),
                        "core": m.core.to_string(),
                        "planted": m.planted,
                    }));
                    self.push(&line);
                }
            }
            Format::Csv => {
                self.header_once(&["graph6", "core", "planted"]);
                for m in members {
                    let line = csv_line([to_graph6(&m.graph), m.core.to_string(), m.planted.to_string()]);
                    self.push(&line);
                }
            }
            Format::Human => {
                for m in members {
                    let line = if m.planted {
                        format!("{} (planted on {})\n", to_graph6(&m.graph), m.core)
                    } else {
                        format!("{}\n", m.core)
                    };
                    self.push(&line);
                }
            }
        }
        Ok(())
    }

    pub fn report(&mut self, fmt: Format, r: &VerifyReport) -> Result<()> {
        match fmt {
            Format::Json => {
                let mut s = r.to_json();
                s.push('\n');
                self.push(&s);
            }
            Format::Human => {
                let s = r.to_markdown();
                self.push(&s);
            }
            Format::Csv => {
                self.header_once(&["claim", "lhs", "rhs", "expected", "actual", "pass", "severity", "note"]);
                for c in &r.claims {
                    let line = csv_line([
                        c.claim.clone(),
                        c.lhs.clone(),
                        c.rhs.clone(),
                        c.expected.to_string(),
                        c.actual.to_string(),
                        c.pass.to_string(),
                        format!("{:?}", c.severity).to_lowercase(),
                        c.note.clone().unwrap_or_default(),
                    ]);
                    self.push(&line);
                }
            }
            Format::Graph6 => return Err(unsupported(fmt, "verify")),
        }
        Ok(())
    }

    pub fn scan(&mut self, fmt: Format, r: &ScanReport) -> Result<()> {
        match fmt {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(r).expect("scan serializes");
                s.push('\n');
                self.push(&s);
            }
            Format::Csv => {
                self.header_once(&["spec", "relation", "gamma", "energy"]);
                for row in &r.rows {
                    let line = csv_line([
                        row.label.clone(),
                        row.relation.to_string(),
                        joined(&row.gamma),
                        row.energy.map(|e| e.to_string()).unwrap_or_default(),
                    ]);
                    self.push(&line);
                }
            }
            Format::Human => {
                let mut s = format!("scan n = {} against {}\n", r.n, r.target);
                if let Some(note) = &r.note {
                    s.push_str(&format!("{note}\n"));
                }
                let c = &r.counts;
                s.push_str(&format!(
                    "≺ {}, = {}, ≻ {}, incomparable {}\n",
                    c.strictly_less, c.equal, c.strictly_greater, c.incomparable
                ));
                for row in r.rows.iter().filter(|x| x.relation != Relation::StrictlyLess) {
                    s.push_str(&format!("  {} {}", row.label, row.relation.symbol()));
                    if let Some(e) = row.energy {
                        s.push_str(&format!(" energy {e}"));
                    }
                    s.push('\n');
                }
                self.push(&s);
            }
            Format::Graph6 => return Err(unsupported(fmt, "scan")),
        }
        Ok(())
    }
}
