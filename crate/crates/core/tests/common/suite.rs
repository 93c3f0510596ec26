//! Position suites shared by the property and acceptance tests.
#![allow(dead_code)]

use cgt_diamond_core::{Dyadic, GameId, GameStore};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn subsets(items: &[GameId]) -> Vec<Vec<GameId>> {
    (0u32..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &g)| g)
                .collect()
        })
        .collect()
}

/// Every form whose options are drawn from `options` (all subsets per side).
pub fn all_forms_over(store: &mut GameStore, options: &[GameId]) -> Vec<GameId> {
    let sides = subsets(options);
    let mut out = Vec::new();
    for l in &sides {
        for r in &sides {
            out.push(store.intern(l.iter().copied(), r.iter().copied()));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// The 256 forms of birthday at most 2.
pub fn day2_forms(store: &mut GameStore) -> Vec<GameId> {
    let day1 = all_forms_over(store, &[GameId::ZERO]);
    assert_eq!(day1.len(), 4);
    let day2 = all_forms_over(store, &day1);
    assert_eq!(day2.len(), 256);
    day2
}

/// Distinct canonical forms among `forms`.
pub fn canonical_values(store: &mut GameStore, forms: &[GameId]) -> Vec<GameId> {
    let mut v: Vec<GameId> = forms.iter().map(|&g| store.canonical_form(g)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Birthday-3 universe: all 256 day-2 forms, every `{a|b}` with at most one
/// option per side drawn from the day-2 values, and `extra` seeded random
/// forms with up to three raw day-2 forms per side.
pub fn day3_suite(store: &mut GameStore, extra: usize, seed: u64) -> Vec<GameId> {
    let day2 = day2_forms(store);
    let values = canonical_values(store, &day2);
    assert_eq!(values.len(), 22, "22 values are born by day 2");
    let mut out = day2.clone();
    let singles: Vec<Vec<GameId>> = std::iter::once(vec![])
        .chain(values.iter().map(|&v| vec![v]))
        .collect();
    for l in &singles {
        for r in &singles {
            out.push(store.intern(l.iter().copied(), r.iter().copied()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..extra {
        let l = pick(&mut rng, &day2, 3);
        let r = pick(&mut rng, &day2, 3);
        out.push(store.intern(l, r));
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// `count` random positions of birthday at most 4 built over `pool`.
pub fn random_positions(store: &mut GameStore, pool: &[GameId], count: usize, seed: u64) -> Vec<GameId> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let l = pick(&mut rng, pool, 3);
            let r = pick(&mut rng, pool, 3);
            store.intern(l, r)
        })
        .collect()
}

fn pick(rng: &mut ChaCha8Rng, pool: &[GameId], max: usize) -> Vec<GameId> {
    let k = rng.gen_range(0..=max);
    pool.choose_multiple(rng, k).copied().collect()
}

/// Numbers used as probes: integers in [-3, 3] and quarters in between.
pub fn number_grid() -> Vec<Dyadic> {
    (-12..=12).map(|n| Dyadic::new(n, 2).unwrap()).collect()
}

pub fn integer_grid() -> Vec<Dyadic> {
    (-4..=4).map(Dyadic::integer).collect()
}
