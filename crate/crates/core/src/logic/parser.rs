//! Recursive-descent parser for the ASCII formula syntax.
//!
//! Precedence from tightest: `!` and strategic prefixes, `&`, `|`, `->`
//! (right-associative), `<->`. Until needs surrounding parentheses:
//! `<<1>>^r ( p U q )`.

use super::formula::{Coalition, Formula, Modality};
use super::{LogicError, RESERVED_PREFIX};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Open,
    Close,
    Comma,
    Rational,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Not => "`!`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Open => "`<<`".into(),
            Tok::Close => "`>>`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Rational => "`^r`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, LogicError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let rest = &text[i..];
        let (tok, len) = if rest.starts_with("<->") {
            (Tok::Iff, 3)
        } else if rest.starts_with("<<") {
            (Tok::Open, 2)
        } else if rest.starts_with(">>") {
            (Tok::Close, 2)
        } else if rest.starts_with("->") {
            (Tok::Implies, 2)
        } else if rest.starts_with("^r") {
            (Tok::Rational, 2)
        } else {
            match c {
                b'!' => (Tok::Not, 1),
                b'&' => (Tok::And, 1),
                b'|' => (Tok::Or, 1),
                b'(' => (Tok::LParen, 1),
                b')' => (Tok::RParen, 1),
                b',' => (Tok::Comma, 1),
                c if c.is_ascii_alphanumeric() || c == b'_' => {
                    let len = rest
                        .bytes()
                        .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
                        .count();
                    (Tok::Ident(rest[..len].to_string()), len)
                }
                _ => {
                    let ch = rest.chars().next().expect("nonempty");
                    return Err(LogicError::Syntax {
                        position: i,
                        message: format!("unexpected character `{ch}`"),
                    });
                }
            }
        };
        out.push((i, tok));
        i += len;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

fn is_atom_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parser settings.
#[derive(Clone, Debug, Default)]
pub struct ParseOptions {
    /// Accept atoms in the reserved `rat_` namespace.
    pub allow_reserved: bool,
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    agents: &'a [String],
    opts: ParseOptions,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, LogicError> {
        Err(LogicError::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), LogicError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!(
                "expected {}, found {}",
                tok.describe(),
                self.peek().describe()
            ))
        }
    }

    fn formula(&mut self) -> Result<Formula, LogicError> {
        let mut lhs = self.implication()?;
        while *self.peek() == Tok::Iff {
            self.bump();
            let rhs = self.implication()?;
            lhs = lhs.iff(rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            let rhs = self.implication()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, LogicError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.conjunction()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, LogicError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, LogicError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(self.unary()?.not())
            }
            Tok::Open => self.strategic(),
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(name) => {
                let at = self.offset();
                self.bump();
                match name.as_str() {
                    "true" => Ok(Formula::True),
                    "false" => Ok(Formula::False),
                    _ if is_atom_name(&name) => {
                        if !self.opts.allow_reserved && name.starts_with(RESERVED_PREFIX) {
                            return Err(LogicError::ReservedAtom(name));
                        }
                        Ok(Formula::Atom(name))
                    }
                    _ => Err(LogicError::Syntax {
                        position: at,
                        message: format!("`{name}` is not an atom name"),
                    }),
                }
            }
            other => self.error(format!("expected a formula, found {}", other.describe())),
        }
    }

    fn coalition(&mut self) -> Result<Coalition, LogicError> {
        self.expect(Tok::Open)?;
        let mut members = Vec::new();
        if *self.peek() != Tok::Close {
            loop {
                match self.bump() {
                    Tok::Ident(id) => {
                        if !self.agents.contains(&id) {
                            return Err(LogicError::UnknownAgent(id));
                        }
                        members.push(id);
                    }
                    _ => {
                        self.pos -= 1;
                        return self.error("expected an agent name");
                    }
                }
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::Close)?;
        Ok(Coalition::new(members))
    }

    fn strategic(&mut self) -> Result<Formula, LogicError> {
        let coalition = self.coalition()?;
        let rational = if *self.peek() == Tok::Rational {
            self.bump();
            true
        } else {
            false
        };
        let modality = Modality {
            coalition,
            rational,
        };
        match self.peek().clone() {
            Tok::Ident(h) if h == "X" => {
                self.bump();
                Ok(Formula::next(modality, self.unary()?))
            }
            Tok::Ident(h) if h == "G" => {
                self.bump();
                Ok(Formula::always(modality, self.unary()?))
            }
            Tok::LParen => {
                self.bump();
                let hold = self.formula()?;
                match self.peek() {
                    Tok::Ident(u) if u == "U" => {
                        self.bump();
                    }
                    other => {
                        return self.error(format!("expected `U`, found {}", other.describe()))
                    }
                }
                let goal = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(Formula::until(modality, hold, goal))
            }
            other => self.error(format!(
                "expected `X`, `G` or `(` after coalition, found {}",
                other.describe()
            )),
        }
    }
}

/// Parses `text`, resolving coalition members against `agents`.
pub fn parse_formula(text: &str, agents: &[String]) -> Result<Formula, LogicError> {
    parse_formula_with(text, agents, ParseOptions::default())
}

pub fn parse_formula_with(
    text: &str,
    agents: &[String],
    opts: ParseOptions,
) -> Result<Formula, LogicError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        agents,
        opts,
    };
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        return p.error(format!("unexpected {}", p.peek().describe()));
    }
    Ok(f)
}
