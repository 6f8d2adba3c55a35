//! Axiom and derived-theorem instances over two agents, checked with the
//! decision procedure.

use std::fmt;
use std::time::{Duration, Instant};

use super::Decider;
use crate::logic::{Coalition, Formula, Modality};

#[derive(Clone, Debug)]
pub struct SuiteEntry {
    pub name: &'static str,
    pub formula: Formula,
    pub expected_valid: bool,
    pub got_valid: bool,
}

impl SuiteEntry {
    pub fn passed(&self) -> bool {
        self.expected_valid == self.got_valid
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &SuiteEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Distinct schema names in first-seen order.
    pub fn schemas(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for e in &self.entries {
            if !out.contains(&e.name) {
                out.push(e.name);
            }
        }
        out
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for name in self.schemas() {
            let of: Vec<&SuiteEntry> = self.entries.iter().filter(|e| e.name == name).collect();
            let bad = of.iter().filter(|e| !e.passed()).count();
            writeln!(f, "{name}: {} instances, {bad} mismatches", of.len())?;
        }
        for e in self.failures() {
            writeln!(
                f,
                "MISMATCH {}: {} expected {} got {}",
                e.name, e.formula, e.expected_valid, e.got_valid
            )?;
        }
        write!(f, "{} instances in {:.2?}", self.entries.len(), self.elapsed)
    }
}

fn coalitions() -> Vec<Coalition> {
    vec![
        Coalition::empty(),
        Coalition::new(["1"]),
        Coalition::new(["2"]),
        Coalition::new(["1", "2"]),
    ]
}

fn x(c: &Coalition, rational: bool, body: Formula) -> Formula {
    let m = Modality {
        coalition: c.clone(),
        rational,
    };
    Formula::next(m, body)
}

fn p() -> Formula {
    Formula::atom("p")
}

fn q() -> Formula {
    Formula::atom("q")
}

/// Goal formulas substituted for schema variables. The last two are modal so
/// that instances also exercise the recursion.
fn pool() -> Vec<Formula> {
    vec![
        p(),
        q(),
        p().not(),
        p().and(q()),
        p().or(q().not()),
        x(&Coalition::new(["1"]), false, q()),
        x(&Coalition::new(["2"]), true, p().or(q())),
    ]
}

/// Pairs `(φ, ψ)` with `φ -> ψ` propositionally valid.
fn entailments() -> Vec<(Formula, Formula)> {
    vec![
        (p().and(q()), p()),
        (p(), p().or(q())),
        (p().not().not(), p()),
        (p().and(p().implies(q())), q()),
        (Formula::False, p()),
        (p(), Formula::True),
    ]
}

/// Propositional tautologies used as premises of the necessitation rule.
fn tautologies() -> Vec<Formula> {
    vec![
        p().or(p().not()),
        p().and(q()).implies(p()),
        Formula::True,
        p().implies(q().implies(p())),
    ]
}

/// Every schema instance with its expected verdict.
pub fn instances() -> Vec<(&'static str, Formula, bool)> {
    let cs = coalitions();
    let pool = pool();
    let grand = Coalition::new(["1", "2"]);
    let empty = Coalition::empty();
    let mut out: Vec<(&'static str, Formula, bool)> = Vec::new();
    let mut add = |name, f, valid| out.push((name, f, valid));

    // propositional tautologies
    for t in tautologies() {
        add("taut", t, true);
    }
    add("taut", p().or(q().not()).or(p().not().and(q())), true);

    for c in &cs {
        add("NAAA", x(c, false, Formula::False).not(), true);
        add("NCS", x(c, false, Formula::True), true);
        add("NARA", x(c, true, Formula::False).not(), true);
        add("Ser1", x(c, true, Formula::True), true);
    }
    for f in &pool {
        add("NP0", x(&empty, true, f.clone()).iff(x(&empty, false, f.clone())), true);
        add(
            "Max0",
            x(&empty, false, f.clone().not()).not().implies(x(&grand, false, f.clone())),
            true,
        );
        for c in &cs {
            add("MR", x(c, true, f.clone()).implies(x(c, false, f.clone())), true);
            let comp = Coalition::new(["1", "2"].into_iter().filter(|a| !c.contains(a)));
            add(
                "Reg0",
                x(c, false, f.clone()).implies(x(&comp, false, f.clone().not()).not()),
                true,
            );
            add(
                "Reg1",
                x(c, true, f.clone()).implies(x(&comp, true, f.clone().not()).not()),
                true,
            );
            for d in &cs {
                if c.is_subset(d) {
                    add("MC0", x(c, false, f.clone()).implies(x(d, false, f.clone())), true);
                    add("MC1", x(c, true, f.clone()).implies(x(d, true, f.clone())), true);
                }
            }
        }
    }
    for f in &pool {
        for g in &pool {
            for c in &cs {
                for rational in [false, true] {
                    let name = if rational { "MG1" } else { "MG0" };
                    let premise = x(&empty, rational, f.clone().implies(g.clone()));
                    let body = x(c, rational, f.clone()).implies(x(c, rational, g.clone()));
                    add(name, premise.implies(body), true);
                }
                let disj = f.clone().or(g.clone());
                add(
                    "Cro",
                    x(c, false, disj.clone())
                        .implies(x(c, false, f.clone()).or(x(&grand, false, g.clone()))),
                    true,
                );
                add(
                    "Cro0.5",
                    x(c, true, disj.clone())
                        .implies(x(c, true, f.clone()).or(x(&grand, false, g.clone()))),
                    true,
                );
                for d in &cs {
                    if !c.is_disjoint(d) {
                        continue;
                    }
                    for rational in [false, true] {
                        let name = if rational { "Sup1" } else { "Sup0" };
                        let lhs = x(c, rational, f.clone()).and(x(d, rational, g.clone()));
                        let rhs = x(&c.union(d), rational, f.clone().and(g.clone()));
                        add(name, lhs.implies(rhs), true);
                    }
                }
            }
            add(
                "DGRC",
                x(&grand, true, f.clone().or(g.clone()))
                    .implies(x(&grand, true, f.clone()).or(x(&grand, true, g.clone()))),
                true,
            );
        }
    }
    for t in tautologies() {
        add("N1", x(&empty, true, t), true);
    }
    // known invalid schemas, on independent atoms
    for (f, g) in [(p(), q()), (q(), p()), (p().not(), q())] {
        add(
            "Max1",
            x(&empty, true, f.clone().not()).not().implies(x(&grand, true, f.clone())),
            false,
        );
        for c in cs.iter().filter(|c| **c != grand) {
            add(
                "Cro1",
                x(c, true, f.clone().or(g.clone()))
                    .implies(x(c, true, f.clone()).or(x(&grand, true, g.clone()))),
                false,
            );
        }
    }
    for (f, g) in entailments() {
        for c in &cs {
            for d in &cs {
                if c.is_subset(d) {
                    add("Mon0", x(c, false, f.clone()).implies(x(d, false, g.clone())), true);
                    add("Mon1", x(c, true, f.clone()).implies(x(d, true, g.clone())), true);
                }
            }
        }
    }
    out
}

/// Runs every instance through one shared decider over agents `1`, `2`.
pub fn builtin_suite() -> SuiteReport {
    let start = Instant::now();
    let mut decider = Decider::new(vec!["1".into(), "2".into()]).expect("two distinct agents");
    let entries = instances()
        .into_iter()
        .map(|(name, formula, expected_valid)| {
            let got_valid = decider.valid(&formula).expect("suite formulas are in the fragment");
            SuiteEntry {
                name,
                formula,
                expected_valid,
                got_valid,
            }
        })
        .collect();
    SuiteReport {
        entries,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_all_schemas() {
        let names: std::collections::BTreeSet<&str> =
            instances().into_iter().map(|(n, _, _)| n).collect();
        for n in [
            "taut", "NAAA", "NP0", "MR", "MG0", "MG1", "MC0", "MC1", "NCS", "Sup0", "Sup1", "Cro",
            "DGRC", "NARA", "Ser1", "N1", "Mon0", "Mon1", "Reg0", "Reg1", "Max0", "Cro0.5", "Max1",
            "Cro1",
        ] {
            assert!(names.contains(n), "missing {n}");
        }
    }
}
