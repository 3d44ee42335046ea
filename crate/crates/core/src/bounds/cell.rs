//! Bound cells and their formulas.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::closure::{closure, is_closed, ClosureKind};
use crate::language::Language;
use crate::ops::{self, BooleanOp};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("cell {0} needs a side condition ({1})")]
    MissingSide(String, &'static str),
    #[error("cell {0} takes no side condition")]
    UnexpectedSide(String),
    #[error("cell {0} needs the accepting-quotient count k")]
    MissingK(String),
    #[error("unknown cell {0:?}: expected op:class[:side]")]
    UnknownCell(String),
    #[error("closure cells take class regular or unary, not {0}")]
    ClosureClass(String),
    #[error("enumeration of {states}-state machines over {letters} letters exceeds the guard")]
    Guard { states: usize, letters: usize },
    #[error(transparent)]
    Witness(#[from] crate::witness::WitnessError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operation {
    Closure(ClosureKind),
    Boolean(BooleanOp),
    Product,
    Star,
    Reversal,
}

impl Operation {
    pub fn arity(self) -> usize {
        match self {
            Operation::Boolean(_) | Operation::Product => 2,
            _ => 1,
        }
    }

    pub fn apply_unary(self, l: &Language) -> Language {
        match self {
            Operation::Closure(kind) => closure(kind, l),
            Operation::Star => ops::star(l),
            Operation::Reversal => ops::reverse(l),
            Operation::Boolean(_) | Operation::Product => panic!("{self} is binary"),
        }
    }

    pub fn apply_binary(self, k: &Language, l: &Language) -> Language {
        match self {
            Operation::Boolean(op) => ops::boolean(op, k, l),
            Operation::Product => ops::product(k, l),
            _ => panic!("{self} is unary"),
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operation::Closure(kind) => write!(f, "closure-{kind}"),
            Operation::Boolean(op) => f.write_str(op.name()),
            Operation::Product => f.write_str("product"),
            Operation::Star => f.write_str("star"),
            Operation::Reversal => f.write_str("reversal"),
        }
    }
}

/// Class of the operands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    Closed(ClosureKind),
    /// Closed languages over a one-letter alphabet.
    UnaryClosed,
    Regular,
}

impl Class {
    pub fn contains(self, l: &Language) -> bool {
        match self {
            Class::Closed(kind) => is_closed(kind, l),
            Class::UnaryClosed => l.alphabet().len() == 1 && is_closed(ClosureKind::Prefix, l),
            Class::Regular => true,
        }
    }

    /// The smallest class member containing `l`, used to steer random search.
    pub fn project(self, l: &Language) -> Language {
        match self {
            Class::Closed(kind) => closure(kind, l),
            Class::UnaryClosed => closure(ClosureKind::Prefix, l),
            Class::Regular => l.clone(),
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Class::Closed(kind) => write!(f, "{kind}"),
            Class::UnaryClosed => f.write_str("unary"),
            Class::Regular => f.write_str("regular"),
        }
    }
}

impl FromStr for Class {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unary" => Ok(Class::UnaryClosed),
            "regular" => Ok(Class::Regular),
            _ => s.parse().map(Class::Closed),
        }
    }
}

/// Side conditions that select between two formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// The operand has an empty quotient.
    HasEmpty,
    NoEmpty,
    /// The operand equals its star.
    StarFixed,
    StarMoves,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::HasEmpty => "has-empty",
            Side::NoEmpty => "no-empty",
            Side::StarFixed => "eq",
            Side::StarMoves => "neq",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Side::HasEmpty, Side::NoEmpty, Side::StarFixed, Side::StarMoves]
            .into_iter()
            .find(|side| side.name() == s)
            .ok_or_else(|| format!("unknown side condition {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum SideKind {
    None,
    EmptyQuotient,
    StarFixpoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundCell {
    pub op: Operation,
    pub class: Class,
    pub side: Option<Side>,
}

impl BoundCell {
    /// A cell with its side condition left open; sided formulas then pick the
    /// side from each operand.
    pub fn new(op: Operation, class: Class) -> Result<Self, BoundError> {
        BoundCell { op, class, side: None }.validated()
    }

    pub fn with_side(self, side: Side) -> Result<Self, BoundError> {
        BoundCell { side: Some(side), ..self }.validated()
    }

    fn validated(self) -> Result<Self, BoundError> {
        if matches!(self.op, Operation::Closure(_))
            && !matches!(self.class, Class::Regular | Class::UnaryClosed)
        {
            return Err(BoundError::ClosureClass(self.class.to_string()));
        }
        let ok = match (self.side_kind(), self.side) {
            (_, None) => true,
            (SideKind::EmptyQuotient, Some(s)) => matches!(s, Side::HasEmpty | Side::NoEmpty),
            (SideKind::StarFixpoint, Some(s)) => matches!(s, Side::StarFixed | Side::StarMoves),
            (SideKind::None, Some(_)) => false,
        };
        if ok {
            Ok(self)
        } else {
            Err(BoundError::UnexpectedSide(self.to_string()))
        }
    }

    fn side_kind(&self) -> SideKind {
        match (self.op, self.class) {
            (Operation::Closure(ClosureKind::Suffix), Class::Regular) => SideKind::EmptyQuotient,
            (Operation::Star, Class::Closed(ClosureKind::Suffix)) => SideKind::StarFixpoint,
            _ => SideKind::None,
        }
    }

    pub fn is_sided(&self) -> bool {
        self.side_kind() != SideKind::None
    }

    /// The side condition an operand satisfies, for sided cells.
    pub fn side_of(&self, l: &Language) -> Option<Side> {
        match self.side_kind() {
            SideKind::None => None,
            SideKind::EmptyQuotient if l.has_empty_quotient() => Some(Side::HasEmpty),
            SideKind::EmptyQuotient => Some(Side::NoEmpty),
            SideKind::StarFixpoint if ops::star(l) == *l => Some(Side::StarFixed),
            SideKind::StarFixpoint => Some(Side::StarMoves),
        }
    }

    pub fn needs_k(&self) -> bool {
        matches!(
            (self.op, self.class),
            (Operation::Product, Class::Closed(ClosureKind::Suffix))
                | (Operation::Product, Class::Regular)
                | (Operation::Star, Class::Regular)
        )
    }

    /// The `k` a formula reads off its (left) operand.
    pub fn k_of(&self, operand: &Language) -> Option<usize> {
        if !self.needs_k() {
            return None;
        }
        let accepting = ops::accepting_quotient_count(operand);
        Some(match self.op {
            // accepting states other than the initial one
            Operation::Star => accepting - usize::from(operand.contains_epsilon()),
            _ => accepting,
        })
    }

    /// Smallest alphabet on which the bound is known to be attained.
    pub fn tightness_letters(&self, n: usize) -> usize {
        match (self.op, self.class) {
            (_, Class::UnaryClosed) => 1,
            (Operation::Closure(ClosureKind::Subword), _) => n.saturating_sub(2).max(1),
            (Operation::Boolean(_), Class::Closed(_)) => 4,
            (Operation::Product, Class::Closed(_)) => 3,
            (Operation::Reversal, Class::Closed(ClosureKind::Suffix | ClosureKind::Factor)) => 3,
            (Operation::Reversal, Class::Closed(ClosureKind::Subword)) => 2 * n,
            _ => 2,
        }
    }

    /// Human-readable formula.
    pub fn formula_text(&self) -> &'static str {
        use ClosureKind::*;
        match (self.op, self.class, self.side) {
            (Operation::Closure(_), Class::UnaryClosed, _) => "n",
            (Operation::Closure(Prefix), _, _) => "n",
            (Operation::Closure(Suffix), _, Some(Side::NoEmpty)) => "2^n-1",
            (Operation::Closure(Suffix), _, _) => "2^(n-1)",
            (Operation::Closure(Factor), _, _) => "2^(n-1)",
            (Operation::Closure(Subword), _, _) => "2^(n-2)+1",
            (Operation::Boolean(op), Class::UnaryClosed, _) => match op {
                BooleanOp::Difference => "m",
                _ => "max(m,n)",
            },
            (Operation::Boolean(op), Class::Closed(Prefix | Factor | Subword), _) => match op {
                BooleanOp::Intersection => "mn-(m+n-2)",
                BooleanOp::Difference => "mn-(n-1)",
                _ => "mn",
            },
            (Operation::Boolean(_), _, _) => "mn",
            (Operation::Product, Class::Closed(Prefix), _) => "(m+1)2^(n-2)",
            (Operation::Product, Class::Closed(Suffix), _) => "(m-k)n+k",
            (Operation::Product, Class::Closed(_), _) => "m+n-1",
            (Operation::Product, Class::UnaryClosed, _) => "m+n-2",
            (Operation::Product, Class::Regular, _) => "m2^n-k2^(n-1)",
            (Operation::Star, Class::Closed(Prefix), _) => "2^(n-2)+1",
            (Operation::Star, Class::Closed(Suffix), Some(Side::StarMoves)) => "n-1",
            (Operation::Star, Class::Closed(Suffix), _) => "n",
            (Operation::Star, Class::Regular, _) => "2^(n-1)+2^(n-k-1)",
            (Operation::Star, _, _) => "2",
            (Operation::Reversal, Class::Closed(Prefix), _) => "2^(n-1)",
            (Operation::Reversal, Class::Closed(Suffix), _) => "2^(n-1)+1",
            (Operation::Reversal, Class::Closed(_), _) => "2^(n-2)+1",
            (Operation::Reversal, Class::UnaryClosed, _) => "n",
            (Operation::Reversal, Class::Regular, _) => "2^n",
        }
    }
}

impl fmt::Display for BoundCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.op {
            Operation::Closure(kind) if self.class == Class::UnaryClosed => {
                write!(f, "closure-{kind}:unary")?
            }
            Operation::Closure(kind) => write!(f, "closure:{kind}")?,
            op => write!(f, "{op}:{}", self.class)?,
        }
        if let Some(side) = self.side {
            write!(f, ":{side}")?;
        }
        Ok(())
    }
}

impl FromStr for BoundCell {
    type Err = BoundError;

    /// `op:class[:side]`, e.g. `product:prefix`, `star:suffix:eq`,
    /// `closure:suffix:has-empty`, `closure-prefix:unary`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || BoundError::UnknownCell(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        if !(2..=3).contains(&parts.len()) {
            return Err(unknown());
        }
        let (op, class) = match parts[0] {
            "closure" => (
                Operation::Closure(parts[1].parse().map_err(|_| unknown())?),
                Class::Regular,
            ),
            name => {
                let op = if let Some(kind) = name.strip_prefix("closure-") {
                    Operation::Closure(kind.parse().map_err(|_| unknown())?)
                } else {
                    match name {
                        "product" => Operation::Product,
                        "star" => Operation::Star,
                        "reversal" => Operation::Reversal,
                        _ => Operation::Boolean(
                            BooleanOp::ALL
                                .into_iter()
                                .find(|op| op.name() == name)
                                .ok_or_else(unknown)?,
                        ),
                    }
                };
                (op, parts[1].parse::<Class>().map_err(|_| unknown())?)
            }
        };
        let cell = BoundCell::new(op, class)?;
        match parts.get(2) {
            Some(side) => cell.with_side(side.parse().map_err(|_| unknown())?),
            None => Ok(cell),
        }
    }
}

fn pow2(e: usize) -> usize {
    assert!(e < usize::BITS as usize - 1, "2^{e} does not fit");
    1 << e
}

/// The bound for `cell` at complexities `m` (left operand, ignored for unary
/// operations) and `n`, with `k` accepting quotients where the formula asks.
pub fn bound_formula(cell: &BoundCell, m: usize, n: usize, k: Option<usize>) -> Result<usize, BoundError> {
    use ClosureKind::*;
    assert!(n >= 1 && (cell.op.arity() == 1 || m >= 1), "complexities start at 1");
    if cell.is_sided() && cell.side.is_none() {
        let which = match cell.op {
            Operation::Star => "eq or neq",
            _ => "has-empty or no-empty",
        };
        return Err(BoundError::MissingSide(cell.to_string(), which));
    }
    let need_k = || k.ok_or_else(|| BoundError::MissingK(cell.to_string()));
    Ok(match (cell.op, cell.class) {
        (Operation::Closure(_), Class::UnaryClosed) => n,
        (Operation::Closure(_), _) if n == 1 => 1,
        (Operation::Closure(Prefix), _) => n,
        (Operation::Closure(Suffix), _) => match cell.side {
            Some(Side::NoEmpty) => pow2(n) - 1,
            _ => pow2(n - 1),
        },
        (Operation::Closure(Factor), _) => pow2(n - 1),
        (Operation::Closure(Subword), _) => pow2(n - 2) + 1,

        (Operation::Boolean(op), Class::UnaryClosed) => match op {
            BooleanOp::Difference if m == 1 => n,
            BooleanOp::Difference => m,
            _ => m.max(n),
        },
        (Operation::Boolean(_), Class::Closed(Prefix | Factor | Subword)) if m == 1 || n == 1 => m * n,
        (Operation::Boolean(op), Class::Closed(Prefix | Factor | Subword)) => match op {
            BooleanOp::Intersection => m * n - (m + n - 2),
            BooleanOp::Difference => m * n - (n - 1),
            BooleanOp::Union | BooleanOp::SymmetricDifference => m * n,
        },
        (Operation::Boolean(_), _) => m * n,

        (Operation::Product, Class::Regular) => m * pow2(n) - need_k()? * pow2(n - 1),
        (Operation::Product, _) if m == 1 || n == 1 => 1,
        (Operation::Product, Class::Closed(Prefix)) => (m + 1) * pow2(n - 2),
        (Operation::Product, Class::Closed(Suffix)) => {
            let k = need_k()?;
            (m - k) * n + k
        }
        (Operation::Product, Class::Closed(_)) => m + n - 1,
        (Operation::Product, _) => m + n - 2,

        (Operation::Star, _) if n == 1 => 2,
        (Operation::Star, Class::Closed(Prefix)) => pow2(n - 2) + 1,
        (Operation::Star, Class::Closed(Suffix)) => match cell.side {
            Some(Side::StarMoves) => n - 1,
            _ => n,
        },
        (Operation::Star, Class::Regular) => {
            let k = need_k()?;
            pow2(n - 1) + pow2((n - 1).saturating_sub(k))
        }
        (Operation::Star, _) => 2,

        (Operation::Reversal, _) if n == 1 => 1,
        (Operation::Reversal, Class::Closed(Prefix)) => pow2(n - 1),
        (Operation::Reversal, Class::Closed(Suffix)) => pow2(n - 1) + 1,
        (Operation::Reversal, Class::Closed(_)) => pow2(n - 2) + 1,
        (Operation::Reversal, Class::UnaryClosed) => n,
        (Operation::Reversal, Class::Regular) => pow2(n),
    })
}
