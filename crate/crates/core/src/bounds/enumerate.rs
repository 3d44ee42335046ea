//! Exhaustive enumeration of small complete machines.
//!
//! A machine with `n` states over `k` letters is identified by an index: its
//! transition table read as `n·k` base-`n` digits (most significant first),
//! followed by its final-state bitmask. Initial state is always 0.

use crate::alphabet::Alphabet;
use crate::bounds::cell::{BoundError, Class};
use crate::dfa::Dfa;
use crate::exec::Execution;
use crate::language::Language;

/// Resource guard for enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumLimits {
    pub max_states: usize,
    pub max_letters: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits {
            max_states: 5,
            max_letters: 2,
        }
    }
}

impl EnumLimits {
    pub fn unlimited() -> Self {
        EnumLimits {
            max_states: usize::MAX,
            max_letters: usize::MAX,
        }
    }

    fn check(&self, states: usize, letters: usize) -> Result<(), BoundError> {
        if states > self.max_states || letters > self.max_letters {
            Err(BoundError::Guard { states, letters })
        } else {
            Ok(())
        }
    }
}

/// Number of transition tables, or `None` on overflow.
pub fn table_count(states: usize, letters: usize) -> Option<u64> {
    (states as u64).checked_pow(u32::try_from(states * letters).ok()?)
}

/// Number of complete machines: tables times final sets.
pub fn machine_count(states: usize, letters: usize) -> Option<u64> {
    table_count(states, letters)?.checked_mul(1u64.checked_shl(states as u32)?)
}

fn decode_table(mut index: u64, states: usize, table: &mut [usize]) {
    for slot in table.iter_mut().rev() {
        *slot = (index % states as u64) as usize;
        index /= states as u64;
    }
}

fn decode_finals(mask: u64, states: usize) -> Vec<bool> {
    (0..states).map(|q| mask >> q & 1 == 1).collect()
}

/// Every complete machine with exactly `states` states over the first `letters`
/// letters that passes `filter`, in index order.
pub fn enumerate_dfas<F>(
    states: usize,
    letters: usize,
    limits: EnumLimits,
    exec: Execution,
    filter: F,
) -> Result<Vec<Dfa>, BoundError>
where
    F: Fn(&Dfa) -> bool + Sync + Send,
{
    limits.check(states, letters)?;
    let total = machine_count(states, letters).ok_or(BoundError::Guard { states, letters })?;
    let alphabet = Alphabet::first(letters);
    let finals = 1u64 << states;
    Ok(exec.filter_map_range(0..total, |i| {
        let mut table = vec![0; states * letters];
        decode_table(i / finals, states, &mut table);
        let dfa = Dfa::from_parts_unchecked(
            alphabet.clone(),
            table,
            0,
            decode_finals(i % finals, states),
        );
        filter(&dfa).then_some(dfa)
    }))
}

/// Is the table in breadth-first canonical numbering with every state reachable?
fn is_bfs_canonical(table: &[usize], states: usize, letters: usize) -> bool {
    let mut next = 1;
    for q in 0..states {
        if q >= next {
            return false;
        }
        for &p in &table[q * letters..(q + 1) * letters] {
            if p == next {
                next += 1;
            } else if p > next {
                return false;
            }
        }
    }
    true
}

/// All languages of complexity exactly `states` over the first `letters` letters,
/// each once, ordered by machine index.
pub fn languages_with_complexity(
    states: usize,
    letters: usize,
    limits: EnumLimits,
    exec: Execution,
) -> Result<Vec<Language>, BoundError> {
    limits.check(states, letters)?;
    let tables = table_count(states, letters).ok_or(BoundError::Guard { states, letters })?;
    let alphabet = Alphabet::first(letters);
    let per_table = exec.filter_map_range(0..tables, |t| {
        let mut table = vec![0; states * letters];
        decode_table(t, states, &mut table);
        if !is_bfs_canonical(&table, states, letters) {
            return None;
        }
        let found: Vec<Language> = (0..1u64 << states)
            .filter_map(|mask| {
                let dfa = Dfa::from_parts_unchecked(
                    alphabet.clone(),
                    table.clone(),
                    0,
                    decode_finals(mask, states),
                );
                (dfa.minimize().states() == states).then(|| Language::from_canonical(dfa))
            })
            .collect();
        Some(found)
    });
    Ok(per_table.into_iter().flatten().collect())
}

/// Class members with complexity at most `max_states`, by complexity.
pub fn class_languages(
    class: Class,
    max_states: usize,
    letters: usize,
    limits: EnumLimits,
    exec: Execution,
) -> Result<Vec<Language>, BoundError> {
    let letters = if class == Class::UnaryClosed { 1 } else { letters };
    let mut all = Vec::new();
    for n in 1..=max_states {
        let found = languages_with_complexity(n, letters, limits, exec)?;
        let keep = exec.map(&found, |l| class.contains(l));
        all.extend(found.into_iter().zip(keep).filter(|(_, k)| *k).map(|(l, _)| l));
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::ClosureKind;

    #[test]
    fn counting() {
        let all = |n, k| enumerate_dfas(n, k, EnumLimits::default(), Execution::Sequential, |_| true);
        assert_eq!(all(1, 1).unwrap().len(), 2);
        assert_eq!(all(2, 1).unwrap().len(), 16);
        assert_eq!(machine_count(2, 2), Some(64));
        assert_eq!(machine_count(4, 2), Some(1 << 20));
    }

    #[test]
    fn guard() {
        assert!(matches!(
            enumerate_dfas(6, 2, EnumLimits::default(), Execution::Sequential, |_| true),
            Err(BoundError::Guard { states: 6, letters: 2 })
        ));
        assert!(languages_with_complexity(3, 3, EnumLimits::default(), Execution::Sequential).is_err());
        assert!(languages_with_complexity(2, 3, EnumLimits::unlimited(), Execution::Sequential).is_ok());
    }

    #[test]
    fn unary_languages_by_hand() {
        // κ=1: ∅, a*. κ=2: ε, aa*, (aa)*, a(aa)*
        let e = Execution::Sequential;
        assert_eq!(languages_with_complexity(1, 1, EnumLimits::default(), e).unwrap().len(), 2);
        assert_eq!(languages_with_complexity(2, 1, EnumLimits::default(), e).unwrap().len(), 4);
    }

    #[test]
    fn each_language_once() {
        let e = Execution::Parallel;
        let langs = languages_with_complexity(3, 2, EnumLimits::default(), e).unwrap();
        let mut sorted: Vec<_> = langs.iter().map(|l| format!("{l:?}")).collect();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), langs.len());
        assert!(langs.iter().all(|l| l.complexity() == 3));
        // minimal canonical machines are what the brute-force filter keeps
        let brute = enumerate_dfas(3, 2, EnumLimits::default(), e, |d| {
            d.is_minimal() && d.is_canonical_numbering()
        })
        .unwrap();
        assert_eq!(brute.len(), langs.len());
    }

    #[test]
    fn class_filter() {
        let e = Execution::Parallel;
        let prefix = class_languages(Class::Closed(ClosureKind::Prefix), 3, 2, EnumLimits::default(), e).unwrap();
        assert!(prefix.iter().all(crate::closure::is_prefix_closed_fast));
        let unary = class_languages(Class::UnaryClosed, 4, 2, EnumLimits::default(), e).unwrap();
        // ∅, a*, then {aⁱ : i ≤ n−2} for n = 2, 3, 4
        assert_eq!(unary.len(), 5);
    }
}
