use std::collections::BTreeSet;
use std::fmt;

/// A set of agent names.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition(BTreeSet<String>);

impl Coalition {
    pub fn empty() -> Self {
        Coalition(BTreeSet::new())
    }

    pub fn new<S: Into<String>>(members: impl IntoIterator<Item = S>) -> Self {
        Coalition(members.into_iter().map(Into::into).collect())
    }

    pub fn members(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn contains(&self, agent: &str) -> bool {
        self.0.contains(agent)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_subset(&self, other: &Coalition) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &Coalition) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &Coalition) -> Coalition {
        Coalition(self.0.union(&other.0).cloned().collect())
    }

    /// Whether this coalition contains every agent of `agents`.
    pub fn is_grand(&self, agents: &[String]) -> bool {
        agents.iter().all(|a| self.0.contains(a))
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<<")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ">>")
    }
}

/// Coalition together with the rational flag of a strategic operator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modality {
    pub coalition: Coalition,
    pub rational: bool,
}

impl Modality {
    pub fn plain(coalition: Coalition) -> Self {
        Self {
            coalition,
            rational: false,
        }
    }

    pub fn rational(coalition: Coalition) -> Self {
        Self {
            coalition,
            rational: true,
        }
    }
}

impl fmt::Display for Modality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coalition)?;
        if self.rational {
            write!(f, "^r")?;
        }
        Ok(())
    }
}

/// Formulas of alternating-time temporal logic with rational capability.
///
/// The derived `Ord` is the structural order used for canonical output.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    True,
    False,
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Next(Modality, Box<Formula>),
    Always(Modality, Box<Formula>),
    Until(Modality, Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Formula) -> Self {
        Formula::Implies(Box::new(self), Box::new(other))
    }

    pub fn iff(self, other: Formula) -> Self {
        Formula::Iff(Box::new(self), Box::new(other))
    }

    pub fn next(modality: Modality, body: Formula) -> Self {
        Formula::Next(modality, Box::new(body))
    }

    pub fn always(modality: Modality, body: Formula) -> Self {
        Formula::Always(modality, Box::new(body))
    }

    pub fn until(modality: Modality, hold: Formula, goal: Formula) -> Self {
        Formula::Until(modality, Box::new(hold), Box::new(goal))
    }

    /// Left-nested conjunction; `true` for no conjuncts.
    pub fn conj(items: impl IntoIterator<Item = Formula>) -> Self {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::True)
    }

    /// Left-nested disjunction; `false` for no disjuncts.
    pub fn disj(items: impl IntoIterator<Item = Formula>) -> Self {
        items
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or(Formula::False)
    }

    /// Maximum nesting depth of strategic operators.
    pub fn modal_degree(&self) -> usize {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => 0,
            Formula::Not(a) => a.modal_degree(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.modal_degree().max(b.modal_degree())
            }
            Formula::Next(_, a) | Formula::Always(_, a) => 1 + a.modal_degree(),
            Formula::Until(_, a, b) => 1 + a.modal_degree().max(b.modal_degree()),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => 1,
            Formula::Not(a) | Formula::Next(_, a) | Formula::Always(_, a) => 1 + a.size(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b)
            | Formula::Until(_, a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Whether the formula uses only next-time strategic operators.
    pub fn is_next_fragment(&self) -> bool {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => true,
            Formula::Not(a) | Formula::Next(_, a) => a.is_next_fragment(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.is_next_fragment() && b.is_next_fragment()
            }
            Formula::Always(..) | Formula::Until(..) => false,
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Atom(p) = f {
                out.insert(p.clone());
            }
        });
        out
    }

    pub fn coalitions(&self) -> BTreeSet<Coalition> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Next(m, _) | Formula::Always(m, _) | Formula::Until(m, _, _) => {
                out.insert(m.coalition.clone());
            }
            _ => {}
        });
        out
    }

    /// Pre-order traversal.
    pub fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => {}
            Formula::Not(a) | Formula::Next(_, a) | Formula::Always(_, a) => a.visit(f),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b)
            | Formula::Until(_, a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }

    fn write_prec(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        let (prec, wrap) = match self {
            Formula::Iff(..) => (1, ctx > 1),
            Formula::Implies(..) => (2, ctx > 2),
            Formula::Or(..) => (3, ctx > 3),
            Formula::And(..) => (4, ctx > 4),
            _ => (5, false),
        };
        if wrap {
            write!(f, "(")?;
        }
        match self {
            Formula::True => write!(f, "true")?,
            Formula::False => write!(f, "false")?,
            Formula::Atom(p) => write!(f, "{p}")?,
            Formula::Not(a) => {
                write!(f, "!")?;
                a.write_prec(f, 5)?;
            }
            Formula::Iff(a, b) => {
                a.write_prec(f, prec)?;
                write!(f, " <-> ")?;
                b.write_prec(f, prec + 1)?;
            }
            Formula::Implies(a, b) => {
                a.write_prec(f, prec + 1)?;
                write!(f, " -> ")?;
                b.write_prec(f, prec)?;
            }
            Formula::Or(a, b) => {
                a.write_prec(f, prec)?;
                write!(f, " | ")?;
                b.write_prec(f, prec + 1)?;
            }
            Formula::And(a, b) => {
                a.write_prec(f, prec)?;
                write!(f, " & ")?;
                b.write_prec(f, prec + 1)?;
            }
            Formula::Next(m, a) => {
                write!(f, "{m} X ")?;
                a.write_prec(f, 5)?;
            }
            Formula::Always(m, a) => {
                write!(f, "{m} G ")?;
                a.write_prec(f, 5)?;
            }
            Formula::Until(m, a, b) => {
                write!(f, "{m} (")?;
                a.write_prec(f, 5)?;
                write!(f, " U ")?;
                b.write_prec(f, 5)?;
                write!(f, ")")?;
            }
        }
        if wrap {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}
