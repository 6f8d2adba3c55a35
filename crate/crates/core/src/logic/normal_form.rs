//! Conversion of next-time formulas into conjunctions of standard
//! disjunctions.
//!
//! Strategic `X` subformulas are treated as opaque letters: the formula is
//! put in negation normal form over atoms and those letters, distributed
//! into CNF, and each clause is split by literal kind. Bodies under `X` are
//! left untouched, so modal degree never grows.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use super::formula::{Coalition, Formula, Modality};
use super::LogicError;

/// A possibly negated atomic proposition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: String,
    pub positive: bool,
}

impl Literal {
    pub fn to_formula(&self) -> Formula {
        let a = Formula::atom(self.atom.clone());
        if self.positive {
            a
        } else {
            a.not()
        }
    }
}

/// A next-time capability `<<C>> X body` (the rational flag is carried by
/// the list it sits in).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Capability {
    pub coalition: Coalition,
    pub body: Formula,
}

impl Capability {
    pub fn to_formula(&self, rational: bool) -> Formula {
        Formula::next(
            Modality {
                coalition: self.coalition.clone(),
                rational,
            },
            self.body.clone(),
        )
    }
}

/// `chi | ((/\ ni & /\ nirat) -> (\/ pi | \/ pirat))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardDisjunction {
    pub chi: Vec<Literal>,
    pub ni: Vec<Capability>,
    pub nirat: Vec<Capability>,
    pub pi: Vec<Capability>,
    pub pirat: Vec<Capability>,
}

impl StandardDisjunction {
    pub fn antecedent(&self) -> Formula {
        Formula::conj(
            self.ni
                .iter()
                .map(|c| c.to_formula(false))
                .chain(self.nirat.iter().map(|c| c.to_formula(true))),
        )
    }

    pub fn consequent(&self) -> Formula {
        Formula::disj(
            self.pi
                .iter()
                .map(|c| c.to_formula(false))
                .chain(self.pirat.iter().map(|c| c.to_formula(true))),
        )
    }

    pub fn to_formula(&self) -> Formula {
        let modal = self.antecedent().implies(self.consequent());
        if self.chi.is_empty() {
            modal
        } else {
            Formula::disj(self.chi.iter().map(Literal::to_formula)).or(modal)
        }
    }

    /// Whether `chi` contains a complementary pair.
    pub fn chi_is_tautology(&self) -> bool {
        self.chi
            .iter()
            .any(|l| l.positive && self.chi.contains(&Literal { atom: l.atom.clone(), positive: false }))
    }

    /// Indices into `ni` with the empty coalition.
    pub fn x0(&self) -> Vec<usize> {
        (0..self.ni.len()).filter(|&i| self.ni[i].coalition.is_empty()).collect()
    }

    /// Indices into `pi` whose coalition is the whole of `agents`.
    pub fn y0(&self, agents: &[String]) -> Vec<usize> {
        (0..self.pi.len()).filter(|&j| self.pi[j].coalition.is_grand(agents)).collect()
    }

    /// Indices into `pirat` whose coalition is the whole of `agents`.
    pub fn y1(&self, agents: &[String]) -> Vec<usize> {
        (0..self.pirat.len())
            .filter(|&j| self.pirat[j].coalition.is_grand(agents))
            .collect()
    }

    pub fn modal_degree(&self) -> usize {
        self.to_formula().modal_degree()
    }

    pub fn to_json(&self) -> Value {
        let caps = |v: &[Capability]| -> Vec<Value> {
            v.iter()
                .map(|c| {
                    json!({
                        "coalition": c.coalition.members().collect::<Vec<_>>(),
                        "formula": c.body.to_string(),
                    })
                })
                .collect()
        };
        json!({
            "chi": self.chi.iter().map(|l| l.to_formula().to_string()).collect::<Vec<_>>(),
            "ni": caps(&self.ni),
            "nirat": caps(&self.nirat),
            "pi": caps(&self.pi),
            "pirat": caps(&self.pirat),
            "formula": self.to_formula().to_string(),
        })
    }
}

impl fmt::Display for StandardDisjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Capability], rational: bool| -> String {
            let parts: Vec<String> = v.iter().map(|c| c.to_formula(rational).to_string()).collect();
            format!("[{}]", parts.join(", "))
        };
        let chi: Vec<String> = self.chi.iter().map(|l| l.to_formula().to_string()).collect();
        write!(
            f,
            "chi = [{}]; NI = {}; NIrat = {}; PI = {}; PIrat = {}",
            chi.join(", "),
            list(&self.ni, false),
            list(&self.nirat, true),
            list(&self.pi, false),
            list(&self.pirat, true)
        )
    }
}

// Letters are `Atom` or `Next` formulas; the flag is the polarity.
type Lit = (Formula, bool);
type Clause = BTreeSet<Lit>;
type Cnf = BTreeSet<Clause>;

fn truth() -> Cnf {
    Cnf::new()
}

fn falsity() -> Cnf {
    Cnf::from([Clause::new()])
}

fn unit(letter: Formula, positive: bool) -> Cnf {
    Cnf::from([Clause::from([(letter, positive)])])
}

fn prune(cnf: Cnf) -> Cnf {
    let clauses: Vec<Clause> = cnf.into_iter().collect();
    clauses
        .iter()
        .enumerate()
        .filter(|(i, c)| {
            !clauses.iter().enumerate().any(|(j, d)| {
                j != *i && d.len() < c.len() && d.is_subset(c)
            })
        })
        .map(|(_, c)| c.clone())
        .collect()
}

fn both(a: Cnf, b: Cnf) -> Cnf {
    let mut out = a;
    out.extend(b);
    prune(out)
}

fn either(a: Cnf, b: Cnf) -> Cnf {
    let mut out = Cnf::new();
    for c in &a {
        for d in &b {
            out.insert(c.union(d).cloned().collect());
        }
    }
    prune(out)
}

fn cnf(phi: &Formula, positive: bool) -> Result<Cnf, LogicError> {
    Ok(match (phi, positive) {
        (Formula::True, true) | (Formula::False, false) => truth(),
        (Formula::True, false) | (Formula::False, true) => falsity(),
        (Formula::Atom(_) | Formula::Next(..), pol) => unit(phi.clone(), pol),
        (Formula::Not(a), pol) => cnf(a, !pol)?,
        (Formula::And(a, b), true) | (Formula::Or(a, b), false) => {
            both(cnf(a, positive)?, cnf(b, positive)?)
        }
        (Formula::And(a, b), false) | (Formula::Or(a, b), true) => {
            either(cnf(a, positive)?, cnf(b, positive)?)
        }
        (Formula::Implies(a, b), true) => either(cnf(a, false)?, cnf(b, true)?),
        (Formula::Implies(a, b), false) => both(cnf(a, true)?, cnf(b, false)?),
        (Formula::Iff(a, b), true) => both(
            either(cnf(a, false)?, cnf(b, true)?),
            either(cnf(a, true)?, cnf(b, false)?),
        ),
        (Formula::Iff(a, b), false) => both(
            either(cnf(a, true)?, cnf(b, true)?),
            either(cnf(a, false)?, cnf(b, false)?),
        ),
        (Formula::Always(..) | Formula::Until(..), _) => {
            return Err(LogicError::Fragment(phi.to_string()))
        }
    })
}

fn split(clause: Clause) -> StandardDisjunction {
    let mut d = StandardDisjunction::default();
    for (letter, positive) in clause {
        match letter {
            Formula::Atom(atom) => d.chi.push(Literal { atom, positive }),
            Formula::Next(m, body) => {
                let cap = Capability {
                    coalition: m.coalition,
                    body: *body,
                };
                match (positive, m.rational) {
                    (false, false) => d.ni.push(cap),
                    (false, true) => d.nirat.push(cap),
                    (true, false) => d.pi.push(cap),
                    (true, true) => d.pirat.push(cap),
                }
            }
            _ => unreachable!("only atoms and next-time letters enter clauses"),
        }
    }
    d
}

/// Conjunction of standard disjunctions equivalent to `phi`. The empty list
/// stands for `true`.
pub fn normal_form(phi: &Formula) -> Result<Vec<StandardDisjunction>, LogicError> {
    if !phi.is_next_fragment() {
        let mut bad = None;
        phi.visit(&mut |f| {
            if bad.is_none() && matches!(f, Formula::Always(..) | Formula::Until(..)) {
                bad = Some(f.to_string());
            }
        });
        return Err(LogicError::Fragment(bad.unwrap_or_default()));
    }
    Ok(cnf(phi, true)?.into_iter().map(split).collect())
}

/// The conjunction of the given disjunctions as a single formula.
pub fn conjunction_of(nf: &[StandardDisjunction]) -> Formula {
    Formula::conj(nf.iter().map(StandardDisjunction::to_formula))
}
