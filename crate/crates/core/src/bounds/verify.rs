//! Tightness runs, exhaustive universality runs and witness search.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::bounds::cell::{bound_formula, BoundCell, BoundError, Class, Operation, Side};
use crate::bounds::enumerate::{languages_with_complexity, table_count, class_languages, EnumLimits};
use crate::bounds::report::{Mode, Point, Verdict, VerificationReport};
use crate::closure::ClosureKind;
use crate::dfa::Dfa;
use crate::exec::Execution;
use crate::language::Language;
use crate::witness::{Witness, WitnessError, WitnessFamily};

/// Parameter grid; `m` defaults to the `n` range for binary cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub m: Option<RangeInclusive<usize>>,
    pub n: RangeInclusive<usize>,
}

impl Grid {
    pub fn unary(n: RangeInclusive<usize>) -> Self {
        Grid { m: None, n }
    }

    pub fn binary(m: RangeInclusive<usize>, n: RangeInclusive<usize>) -> Self {
        Grid { m: Some(m), n }
    }

    /// Points in grid order, `m` outermost.
    pub fn points(&self, arity: usize) -> Vec<(Option<usize>, usize)> {
        if arity == 1 {
            return self.n.clone().map(|n| (None, n)).collect();
        }
        let ms = self.m.clone().unwrap_or_else(|| self.n.clone());
        ms.flat_map(|m| self.n.clone().map(move |n| (Some(m), n)))
            .collect()
    }
}

/// Limits for [`find_witness`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Alphabets of size 2 up to this are tried in turn.
    pub max_letters: usize,
    /// Operands with at most this many quotients are enumerated exhaustively.
    pub exhaustive_states: usize,
    /// Skip exhaustive enumeration beyond this many transition tables.
    pub max_tables: u64,
    /// Cap on exhaustive candidates (operands or pairs) per alphabet.
    pub max_candidates: u64,
    /// Random candidates per alphabet after the exhaustive phase.
    pub samples: u64,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_letters: 4,
            exhaustive_states: 3,
            max_tables: 1 << 23,
            max_candidates: 2_000_000,
            samples: 2_000,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub hit: Option<Witness>,
    pub kappa: Option<usize>,
    pub k: Option<usize>,
    /// The bound the hit attains, or the largest admissible bound on a miss.
    pub bound: usize,
    pub letters: Option<usize>,
    pub phase: Option<Phase>,
    /// Candidates examined up to and including the hit.
    pub examined: u64,
}

fn require_side(cell: &BoundCell) -> Result<(), BoundError> {
    if cell.is_sided() && cell.side.is_none() {
        bound_formula(cell, 1, 1, Some(0)).map(|_| ())
    } else {
        Ok(())
    }
}

/// Largest bound over the admissible `k` when the caller leaves it open.
fn bound_any_k(cell: &BoundCell, m: usize, n: usize, k: Option<usize>) -> Result<usize, BoundError> {
    if !cell.needs_k() || k.is_some() {
        return bound_formula(cell, m, n, k);
    }
    let top = if cell.op == Operation::Star { n.saturating_sub(1) } else { m };
    (0..=top.max(1))
        .map(|k| bound_formula(cell, m, n, Some(k)))
        .try_fold(0, |best, b| b.map(|b| best.max(b)))
}

struct Target<'a> {
    cell: &'a BoundCell,
    m: usize,
    n: usize,
    k: Option<usize>,
}

impl Target<'_> {
    fn side_ok(&self, l: &Language) -> bool {
        self.cell.side.is_none() || self.cell.side_of(l) == self.cell.side
    }

    /// `(kappa, k, bound)` if the candidate attains the bound.
    fn hit(&self, operands: &Witness) -> Option<(usize, Option<usize>, usize)> {
        let (kappa, left) = match operands {
            Witness::Single(l) => (self.cell.op.apply_unary(l).complexity(), l),
            Witness::Pair(k, l) => (self.cell.op.apply_binary(k, l).complexity(), k),
        };
        let k = self.cell.k_of(left);
        if self.k.is_some() && k != self.k {
            return None;
        }
        let bound = bound_formula(self.cell, self.m, self.n, k).ok()?;
        (kappa == bound).then_some((kappa, k, bound))
    }
}

fn exhaustive_members(
    target: &Target,
    class: Class,
    states: usize,
    letters: usize,
    budget: &Budget,
    exec: Execution,
) -> Option<Vec<Language>> {
    if states > budget.exhaustive_states || table_count(states, letters)? > budget.max_tables {
        return None;
    }
    let all = languages_with_complexity(states, letters, EnumLimits::unlimited(), exec).ok()?;
    let keep = exec.map(&all, |l| class.contains(l) && target.side_ok(l));
    Some(all.into_iter().zip(keep).filter(|(_, k)| *k).map(|(l, _)| l).collect())
}

fn random_member(
    class: Class,
    target: usize,
    letters: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Language> {
    let states = target + rng.gen_range(0..=2);
    let alphabet = Alphabet::first(letters);
    let table: Vec<usize> = (0..states * letters).map(|_| rng.gen_range(0..states)).collect();
    let finals: Vec<bool> = (0..states).map(|_| rng.gen_bool(0.5)).collect();
    let dfa = Dfa::from_fn(alphabet, states, 0, |q, a| table[q * letters + a], |q| finals[q]);
    let l = class.project(&Language::from_dfa(&dfa));
    (l.complexity() == target).then_some(l)
}

fn sample_rng(seed: u64, letters: usize, i: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((letters as u64) << 48) ^ i);
    rng
}

/// Searches class members with complexities `m` (left, binary cells only) and
/// `n` for operands attaining the bound exactly. `k`, when given, fixes the
/// accepting-quotient count of the operand the formula reads.
pub fn find_witness(
    cell: &BoundCell,
    m: usize,
    n: usize,
    k: Option<usize>,
    budget: &Budget,
    exec: Execution,
) -> Result<SearchOutcome, BoundError> {
    require_side(cell)?;
    let binary = cell.op.arity() == 2;
    let target = Target { cell, m, n, k };
    let mut outcome = SearchOutcome {
        hit: None,
        kappa: None,
        k,
        bound: bound_any_k(cell, m, n, k)?,
        letters: None,
        phase: None,
        examined: 0,
    };
    let alphabets: Vec<usize> = if cell.class == Class::UnaryClosed {
        vec![1]
    } else {
        (2..=budget.max_letters.max(2)).collect()
    };
    let found = |w: Witness, (kappa, k, bound): (usize, Option<usize>, usize), letters, phase, examined| {
        SearchOutcome {
            hit: Some(w),
            kappa: Some(kappa),
            k,
            bound,
            letters: Some(letters),
            phase: Some(phase),
            examined,
        }
    };

    for letters in alphabets {
        let right = exhaustive_members(&target, cell.class, n, letters, budget, exec);
        let left = if binary {
            exhaustive_members(&target, cell.class, m, letters, budget, exec)
        } else {
            Some(Vec::new())
        };
        if let (Some(ls), Some(ks)) = (right, left) {
            let count = if binary { ks.len() * ls.len() } else { ls.len() } as u64;
            let count = count.min(budget.max_candidates);
            let candidate = |i: u64| {
                let i = i as usize;
                if binary {
                    Witness::Pair(ks[i / ls.len()].clone(), ls[i % ls.len()].clone())
                } else {
                    Witness::Single(ls[i].clone())
                }
            };
            let first = exec.find_first_range(0..count, |i| {
                let w = candidate(i);
                target.hit(&w).map(|h| (i, w, h))
            });
            outcome.examined += count;
            if let Some((i, w, h)) = first {
                let examined = outcome.examined - count + i + 1;
                return Ok(found(w, h, letters, Phase::Exhaustive, examined));
            }
        }

        let first = exec.find_first_range(0..budget.samples, |i| {
            let mut rng = sample_rng(budget.seed, letters, i);
            let l = random_member(cell.class, n, letters, &mut rng).filter(|l| target.side_ok(l))?;
            let w = if binary {
                Witness::Pair(random_member(cell.class, m, letters, &mut rng)?, l)
            } else {
                Witness::Single(l)
            };
            target.hit(&w).map(|h| (i, w, h))
        });
        if let Some((i, w, h)) = first {
            let examined = outcome.examined + i + 1;
            return Ok(found(w, h, letters, Phase::Random, examined));
        }
        outcome.examined += budget.samples;
    }
    Ok(outcome)
}

/// The generator attaining `cell` at `(m, n)`, if one exists there.
pub fn tightness_witness(cell: &BoundCell, m: usize, n: usize) -> Option<Result<Witness, WitnessError>> {
    use ClosureKind::*;
    use WitnessFamily as W;
    let family = match (cell.op, cell.class, cell.side) {
        (Operation::Closure(_), Class::UnaryClosed, _) => W::UnaryClosed { n },
        (Operation::Closure(Prefix), Class::Regular, _) => W::ClosurePrefix { n },
        (Operation::Closure(Suffix), Class::Regular, Some(Side::NoEmpty)) => W::Fig1 { n },
        (Operation::Closure(Suffix), Class::Regular, Some(Side::HasEmpty)) => W::Fig2 { n },
        (Operation::Closure(Factor), Class::Regular, _) => W::Fig2 { n },
        (Operation::Closure(Subword), Class::Regular, _) => W::ClosureSubword { n },
        (Operation::Product, Class::Closed(Prefix), _) => W::ProductPrefixPair { m, n },
        (Operation::Product, Class::Closed(Suffix), _) => W::ProductSuffixPair { m, n },
        (Operation::Product, Class::Closed(Factor | Subword), _) => W::ProductSubwordPair { m, n },
        (Operation::Product, Class::UnaryClosed, _) => {
            let unary = |n| W::UnaryClosed { n }.build().map(|w| w.single().expect("single"));
            if m < 2 || n < 2 {
                return None;
            }
            return Some(unary(m).and_then(|k| Ok(Witness::Pair(k, unary(n)?))));
        }
        (Operation::Star, Class::Closed(Prefix), _) => W::StarPrefix { n },
        (Operation::Star, Class::Closed(Suffix), Some(Side::StarFixed)) => W::StarSuffixEq { n },
        (Operation::Star, Class::Closed(Suffix), Some(Side::StarMoves)) => W::StarSuffixNeq { n },
        (Operation::Star, Class::Closed(Factor | Subword), _) => W::StarSubword { n },
        (Operation::Star | Operation::Reversal, Class::UnaryClosed, _) => W::UnaryClosed { n },
        _ => return None,
    };
    let (min, max) = family.range();
    let m_ok = family.params().0.is_none_or(|m| (min..=max).contains(&m));
    (m_ok && (min..=max).contains(&n)).then(|| family.build())
}

fn apply(cell: &BoundCell, w: &Witness) -> Language {
    match w {
        Witness::Single(l) => cell.op.apply_unary(l),
        Witness::Pair(k, l) => cell.op.apply_binary(k, l),
    }
}

fn tightness_point(
    cell: &BoundCell,
    m: Option<usize>,
    n: usize,
    search: Option<&Budget>,
    exec: Execution,
) -> Result<Point, BoundError> {
    let mut point = Point {
        m,
        n,
        k: None,
        side: cell.side,
        kappa: None,
        bound: 0,
        verdict: Verdict::Skip,
        samples: None,
    };
    let mm = m.unwrap_or(0);
    if let Some(witness) = tightness_witness(cell, mm, n) {
        let witness = witness?;
        let left = witness.languages()[0];
        point.k = cell.k_of(left);
        point.bound = bound_formula(cell, mm, n, point.k)?;
        let kappa = apply(cell, &witness).complexity();
        point.kappa = Some(kappa);
        point.verdict = Verdict::of(kappa, point.bound);
        return Ok(point);
    }
    point.bound = bound_any_k(cell, mm, n, None)?;
    if let Some(budget) = search {
        let outcome = find_witness(cell, mm, n, None, budget, exec)?;
        point.bound = outcome.bound;
        point.samples = Some(outcome.examined as usize);
        match outcome.kappa {
            Some(kappa) => {
                point.kappa = Some(kappa);
                point.k = outcome.k;
                point.verdict = Verdict::of(kappa, point.bound);
            }
            None => point.verdict = Verdict::Inconclusive,
        }
    }
    Ok(point)
}

/// Note for the prefix-closed product cell, whose published table value
/// `m·2^(n−2)` is one short of the attained `(m+1)·2^(n−2)`.
fn prefix_product_note(cell: &BoundCell, points: &[Point]) -> Option<String> {
    if (cell.op, cell.class) != (Operation::Product, Class::Closed(ClosureKind::Prefix)) {
        return None;
    }
    let beyond: Vec<String> = points
        .iter()
        .filter_map(|p| {
            let (m, kappa) = (p.m?, p.kappa?);
            if m < 2 || p.n < 2 {
                return None;
            }
            let table = m << (p.n - 2);
            (kappa > table).then(|| format!("m={m} n={} table={table} attained={kappa}", p.n))
        })
        .collect();
    if beyond.is_empty() {
        return None;
    }
    Some(format!(
        "cell={cell} published table value m*2^(n-2) disagrees with the attained (m+1)*2^(n-2); \
         the attained value governs the verdict ({})",
        beyond.join(", ")
    ))
}

/// Builds witnesses at every grid point and compares the result with the bound.
/// Points without a generator go to [`find_witness`] when `search` is given and
/// are reported as skipped otherwise.
pub fn verify_tightness(
    cell: &BoundCell,
    grid: &Grid,
    search: Option<&Budget>,
    exec: Execution,
) -> Result<VerificationReport, BoundError> {
    require_side(cell)?;
    let start = Instant::now();
    let points = grid.points(cell.op.arity());
    let results = exec.map(&points, |&(m, n)| tightness_point(cell, m, n, search, exec));
    let points = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let notes = prefix_product_note(cell, &points).into_iter().collect();
    let searched = points.iter().any(|p| p.samples.is_some());
    Ok(VerificationReport {
        cell: *cell,
        mode: Mode::Tightness,
        points,
        notes,
        seed: search.filter(|_| searched).map(|b| b.seed),
        runtime: start.elapsed(),
    })
}

type GroupKey = (Option<usize>, usize, Option<usize>, Option<Side>);

/// Applies the operation to every class member (or pair of members) with at
/// most `max_states` quotients over `letters` letters and compares with the
/// bound. One point per `(m, n, k, side)`, carrying the largest `kappa` seen.
pub fn verify_universal(
    cell: &BoundCell,
    max_states: usize,
    letters: usize,
    limits: EnumLimits,
    exec: Execution,
) -> Result<VerificationReport, BoundError> {
    let start = Instant::now();
    let members = class_languages(cell.class, max_states, letters, limits, exec)?;
    let members: Vec<Language> = members
        .into_iter()
        .filter(|l| cell.side.is_none() || cell.side_of(l) == cell.side)
        .collect();
    let observe = |left: Option<&Language>, l: &Language, result: Language| -> (GroupKey, usize) {
        let m = left.map(Language::complexity);
        let k = cell.k_of(left.unwrap_or(l));
        ((m, l.complexity(), k, cell.side_of(l)), result.complexity())
    };
    let observations: Vec<(GroupKey, usize)> = if cell.op.arity() == 1 {
        exec.map(&members, |l| observe(None, l, cell.op.apply_unary(l)))
    } else {
        exec.flat_map(&members, |k| {
            members
                .iter()
                .map(|l| observe(Some(k), l, cell.op.apply_binary(k, l)))
                .collect()
        })
    };

    let mut groups: BTreeMap<GroupKey, (usize, usize)> = BTreeMap::new();
    for (key, kappa) in observations {
        let entry = groups.entry(key).or_insert((0, 0));
        entry.0 = entry.0.max(kappa);
        entry.1 += 1;
    }
    let mut points = Vec::with_capacity(groups.len());
    for ((m, n, k, side), (kappa, samples)) in groups {
        let sided = match side {
            Some(side) => cell.with_side(side)?,
            None => *cell,
        };
        let bound = bound_formula(&sided, m.unwrap_or(0), n, k)?;
        points.push(Point {
            m,
            n,
            k,
            side,
            kappa: Some(kappa),
            bound,
            verdict: Verdict::of(kappa, bound),
            samples: Some(samples),
        });
    }
    Ok(VerificationReport {
        cell: *cell,
        mode: Mode::Universal,
        points,
        notes: Vec::new(),
        seed: None,
        runtime: start.elapsed(),
    })
}
