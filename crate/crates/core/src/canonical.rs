//! Canonical forms, number recognition, stops and the simplest-number search.

use alloc::vec::Vec;

use crate::dyadic::{Dyadic, MAX_EXPONENT};
use crate::error::{Error, Result};
use crate::game::{GameId, GameStore, Player};

/// Which numbers count as members: the integers or all dyadic rationals.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NumberSystem {
    Integers,
    Dyadics,
}

impl NumberSystem {
    pub fn contains(self, x: Dyadic) -> bool {
        match self {
            NumberSystem::Integers => x.is_integer(),
            NumberSystem::Dyadics => true,
        }
    }
}

/// Shape of a value after canonicalization.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ValueClass {
    Number(Dyadic),
    /// `{l | r}` with both options numbers and the whole not a number.
    Pair(Dyadic, Dyadic),
    Other,
}

impl ValueClass {
    /// Whether the value equals some `<a|b>` (either side possibly empty)
    /// with `a`, `b` in `A`. This covers all of `A`, and over the integers
    /// also the halves `<m|m+1>`.
    pub fn in_pair_set(self, system: NumberSystem) -> bool {
        match self {
            ValueClass::Number(x) => match system {
                NumberSystem::Integers => x.exponent() <= 1,
                NumberSystem::Dyadics => true,
            },
            ValueClass::Pair(l, r) => system.contains(l) && system.contains(r),
            ValueClass::Other => false,
        }
    }
}

/// Limits for [`GameStore::simplest_between`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBound {
    /// Candidates are scanned up to `|x| <= margin + max |stop|`.
    pub margin: i64,
    /// Largest denominator exponent tried for dyadic candidates.
    pub max_exponent: u32,
}

impl Default for SearchBound {
    fn default() -> Self {
        SearchBound {
            margin: 2,
            max_exponent: 32,
        }
    }
}

impl GameStore {
    pub fn integer(&mut self, n: i64) -> GameId {
        self.number(Dyadic::integer(n))
    }

    /// Canonical form of a number: `0 = {|}`, `m = {m-1|}`, `-m = {|1-m}`,
    /// `n/2^d = {(n-1)/2^d | (n+1)/2^d}`.
    pub fn number(&mut self, x: Dyadic) -> GameId {
        if let Some(&id) = self.number_games.get(&x) {
            return id;
        }
        let id = if x.is_integer() {
            let n = x.numerator();
            let step: i64 = if n >= 0 { 1 } else { -1 };
            // walk down towards zero until a cached integer is found
            let mut k = n;
            while k != 0 && !self.number_games.contains_key(&Dyadic::integer(k)) {
                k -= step;
            }
            let mut id = if k == 0 {
                GameId::ZERO
            } else {
                self.number_games[&Dyadic::integer(k)]
            };
            self.number_games.insert(Dyadic::integer(k), id);
            while k != n {
                k += step;
                id = if step > 0 {
                    self.intern([id], [])
                } else {
                    self.intern([], [id])
                };
                self.number_games.insert(Dyadic::integer(k), id);
            }
            id
        } else {
            let (lo, hi) = x.neighbors();
            let l = self.number(lo);
            let r = self.number(hi);
            self.intern([l], [r])
        };
        self.number_games.insert(x, id);
        self.canonical_memo.insert(id, id);
        self.number_memo.insert(id, Some(x));
        id
    }

    /// Drops every Left option `<=` a sibling and every Right option `>=` a
    /// sibling. Among mutually equal options the smallest id survives.
    pub fn remove_dominated(&mut self, g: GameId) -> GameId {
        let left = self.left_options(g).to_vec();
        let right = self.right_options(g).to_vec();
        let left = self.undominated(&left, Player::Left);
        let right = self.undominated(&right, Player::Right);
        self.intern(left, right)
    }

    fn undominated(&mut self, options: &[GameId], player: Player) -> Vec<GameId> {
        let mut keep = Vec::with_capacity(options.len());
        'outer: for &a in options {
            for &b in options {
                if a == b {
                    continue;
                }
                // a is worse than b for `player`
                let (worse, back) = match player {
                    Player::Left => (self.leq(a, b), self.leq(b, a)),
                    Player::Right => (self.leq(b, a), self.leq(a, b)),
                };
                if worse && (!back || b < a) {
                    continue 'outer;
                }
            }
            keep.push(a);
        }
        keep
    }

    /// Replaces reversible options until none remain: a Left option `gL`
    /// with some `gLR <= g` is swapped for the Left options of that `gLR`,
    /// and dually for Right.
    pub fn bypass_reversible(&mut self, g: GameId) -> GameId {
        let mut left = self.left_options(g).to_vec();
        let mut right = self.right_options(g).to_vec();
        while self.bypass_once(g, &mut left, &mut right) {}
        self.intern(left, right)
    }

    /// One pass over both sides; `reference` is any position equal to the
    /// one being rewritten. Returns whether anything changed.
    fn bypass_once(&mut self, reference: GameId, left: &mut Vec<GameId>, right: &mut Vec<GameId>) -> bool {
        let mut changed = false;
        let mut next_left = Vec::with_capacity(left.len());
        for &gl in left.iter() {
            let reverser = self
                .right_options(gl)
                .to_vec()
                .into_iter()
                .find(|&glr| self.leq(glr, reference));
            match reverser {
                Some(glr) => {
                    next_left.extend_from_slice(self.left_options(glr));
                    changed = true;
                }
                None => next_left.push(gl),
            }
        }
        let mut next_right = Vec::with_capacity(right.len());
        for &gr in right.iter() {
            let reverser = self
                .left_options(gr)
                .to_vec()
                .into_iter()
                .find(|&grl| self.leq(reference, grl));
            match reverser {
                Some(grl) => {
                    next_right.extend_from_slice(self.right_options(grl));
                    changed = true;
                }
                None => next_right.push(gr),
            }
        }
        next_left.sort_unstable();
        next_left.dedup();
        next_right.sort_unstable();
        next_right.dedup();
        *left = next_left;
        *right = next_right;
        changed
    }

    /// The unique simplest position equal to `g`. Positions are equal iff
    /// their canonical forms share an id.
    pub fn canonical_form(&mut self, g: GameId) -> GameId {
        if let Some(&c) = self.canonical_memo.get(&g) {
            return c;
        }
        let mut left: Vec<GameId> = self
            .left_options(g)
            .to_vec()
            .into_iter()
            .map(|o| self.canonical_form(o))
            .collect();
        let mut right: Vec<GameId> = self
            .right_options(g)
            .to_vec()
            .into_iter()
            .map(|o| self.canonical_form(o))
            .collect();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        loop {
            left = self.undominated(&left, Player::Left);
            right = self.undominated(&right, Player::Right);
            if !self.bypass_once(g, &mut left, &mut right) {
                break;
            }
        }
        let c = self.intern(left, right);
        self.canonical_memo.insert(g, c);
        self.canonical_memo.insert(c, c);
        c
    }

    /// Value-level number recognition over the dyadics.
    pub fn number_value(&mut self, g: GameId) -> Option<Dyadic> {
        if let Some(&known) = self.number_memo.get(&g) {
            return known;
        }
        let c = self.canonical_form(g);
        let value = if c == g { self.decode_number(c) } else { self.number_value(c) };
        self.number_memo.insert(g, value);
        value
    }

    /// `c` is canonical. Guess the number its shape encodes, then confirm by
    /// building that number's canonical form.
    fn decode_number(&mut self, c: GameId) -> Option<Dyadic> {
        let left = self.left_options(c).to_vec();
        let right = self.right_options(c).to_vec();
        let candidate = match (left.as_slice(), right.as_slice()) {
            ([], []) => Dyadic::ZERO,
            ([l], []) => {
                let x = self.number_value(*l)?;
                if !x.is_integer() || x < Dyadic::ZERO {
                    return None;
                }
                x.checked_add(Dyadic::integer(1))?
            }
            ([], [r]) => {
                let x = self.number_value(*r)?;
                if !x.is_integer() || x > Dyadic::ZERO {
                    return None;
                }
                x.checked_add(Dyadic::integer(-1))?
            }
            ([l], [r]) => {
                let (a, b) = (self.number_value(*l)?, self.number_value(*r)?);
                Dyadic::simplest_in_open(Some(a), Some(b))?
            }
            _ => return None,
        };
        (self.number(candidate) == c).then_some(candidate)
    }

    /// The number `g` equals, if it is a member of `system`.
    pub fn as_number(&mut self, g: GameId, system: NumberSystem) -> Option<Dyadic> {
        self.number_value(g).filter(|x| system.contains(*x))
    }

    pub fn classify_value(&mut self, g: GameId) -> ValueClass {
        if let Some(x) = self.number_value(g) {
            return ValueClass::Number(x);
        }
        let c = self.canonical_form(g);
        match (self.left_options(c), self.right_options(c)) {
            (&[l], &[r]) => match (self.number_value(l), self.number_value(r)) {
                (Some(a), Some(b)) => ValueClass::Pair(a, b),
                _ => ValueClass::Other,
            },
            _ => ValueClass::Other,
        }
    }

    /// Left stop over `system`: `g` itself if `g` is a member, otherwise the
    /// best right stop among the Left options.
    pub fn left_stop(&mut self, g: GameId, system: NumberSystem) -> Result<Dyadic> {
        self.stop(g, system, Player::Left)
    }

    pub fn right_stop(&mut self, g: GameId, system: NumberSystem) -> Result<Dyadic> {
        self.stop(g, system, Player::Right)
    }

    pub fn stops(&mut self, g: GameId, system: NumberSystem) -> Result<(Dyadic, Dyadic)> {
        Ok((self.left_stop(g, system)?, self.right_stop(g, system)?))
    }

    fn stop(&mut self, g: GameId, system: NumberSystem, player: Player) -> Result<Dyadic> {
        if let Some(&s) = self.stop_memo.get(&(g, system, player)) {
            return Ok(s);
        }
        let value = match self.as_number(g, system) {
            Some(x) => x,
            None => {
                let options = self.options(g, player).to_vec();
                let mut best: Option<Dyadic> = None;
                for o in options {
                    let s = self.stop(o, system, player.opponent())?;
                    best = Some(match (best, player) {
                        (None, _) => s,
                        (Some(b), Player::Left) => b.max(s),
                        (Some(b), Player::Right) => b.min(s),
                    });
                }
                best.ok_or(Error::Malformed(g))?
            }
        };
        self.stop_memo.insert((g, system, player), value);
        Ok(value)
    }

    /// [`GameStore::simplest_between_with`] under the default bound.
    pub fn simplest_between(
        &mut self,
        lower: &[GameId],
        upper: &[GameId],
        system: NumberSystem,
    ) -> Result<Option<Dyadic>> {
        self.simplest_between_with(lower, upper, system, SearchBound::default())
    }

    /// The simplest `x` in `system` with `lo ⧏ x` for every `lo` in `lower`
    /// and `x ⧏ hi` for every `hi` in `upper`.
    ///
    /// The admissible numbers form an interval whose endpoints are dyadic
    /// stops of the inputs, so scanning denominators up to one past the
    /// largest stop denominator is complete. Each denominator level is
    /// bisected. `Ok(None)` means no member exists; `SearchExhausted` means
    /// completeness would need a denominator beyond `bound.max_exponent`.
    pub fn simplest_between_with(
        &mut self,
        lower: &[GameId],
        upper: &[GameId],
        system: NumberSystem,
        bound: SearchBound,
    ) -> Result<Option<Dyadic>> {
        let mut magnitude: i64 = 0;
        let mut stop_exponent: u32 = 0;
        for &g in lower.iter().chain(upper) {
            let (ls, rs) = self.stops(g, NumberSystem::Dyadics)?;
            for s in [ls, rs] {
                magnitude = magnitude.max(s.abs_ceil());
                stop_exponent = stop_exponent.max(s.exponent());
            }
        }
        let radius = magnitude
            .checked_add(bound.margin)
            .ok_or(Error::Precondition("stop magnitude overflows the search"))?;
        let needed = match system {
            NumberSystem::Integers => 0,
            NumberSystem::Dyadics => stop_exponent + 1,
        };
        let top = needed.min(bound.max_exponent).min(MAX_EXPONENT);
        let lower = lower.to_vec();
        let upper = upper.to_vec();
        for e in 0..=top {
            let span = i64::try_from((radius as i128) << e)
                .map_err(|_| Error::Precondition("search range overflows"))?;
            let above = |store: &mut GameStore, n: i64| {
                let x = store.number(Dyadic::new(n, e).expect("exponent bounded"));
                lower.iter().all(|&lo| store.lfuzzy(lo, x))
            };
            // smallest n in [-span, span] clearing every lower constraint
            let first = match partition_point(-span, span, |n| !above(self, n)) {
                Some(n) => n,
                None => continue,
            };
            let below = |store: &mut GameStore, n: i64| {
                let x = store.number(Dyadic::new(n, e).expect("exponent bounded"));
                upper.iter().all(|&hi| store.lfuzzy(x, hi))
            };
            // first n in [first, span] violating an upper constraint
            let end = partition_point(first, span, |n| below(self, n)).unwrap_or(span + 1);
            let last = end - 1;
            if first > last {
                continue;
            }
            let n = if e == 0 {
                if first > 0 {
                    first
                } else if last < 0 {
                    last
                } else {
                    0
                }
            } else {
                // a range with two grid points would contain an even one,
                // already found at a coarser level
                debug_assert_eq!(first, last);
                first
            };
            return Ok(Some(Dyadic::new(n, e).expect("exponent bounded")));
        }
        if needed > top {
            return Err(Error::SearchExhausted {
                max_exponent: bound.max_exponent,
            });
        }
        Ok(None)
    }
}

/// First `n` in `[lo, hi]` where `pred` turns false, assuming `pred` is
/// true on a prefix. `None` if `pred` holds everywhere.
fn partition_point(lo: i64, hi: i64, mut pred: impl FnMut(i64) -> bool) -> Option<i64> {
    let (mut a, mut b) = (lo, hi + 1);
    while a < b {
        let mid = a + (b - a) / 2;
        if pred(mid) {
            a = mid + 1;
        } else {
            b = mid;
        }
    }
    (a <= hi).then_some(a)
}
