//! Guide options, the diamond family of properties, and verifiers for
//! option-closed sets.
//!
//! A position `G` outside the number system `A` is anchored by its *guide*
//! options: the Left options realizing its left stop and the Right options
//! realizing its right stop. Every property here asks for a pair of guide
//! options (`gL`, `gR`) together with some local certificate:
//!
//! | property              | system | certificate                              |
//! |-----------------------|--------|------------------------------------------|
//! | `DiamondA(A)`         | `A`    | `x ∈ A` with `gL ⧏ x ⧏ gR`               |
//! | `Diamond`             | ℤ      | common `H` with `gL →R H ←L gR`          |
//! | `DiamondLeq`          | ℤ      | `gLR <= gRL`                             |
//! | `DiamondLeftLfuzzy`   | ℤ      | `gLR ⧏ gR`                               |
//! | `DiamondRightLfuzzy`  | ℤ      | `gL ⧏ gRL`                               |
//! | `DiamondLeftLeq`      | 𝔻      | `gLR <= gR`                              |
//! | `DiamondRightLeq`     | 𝔻      | `gL <= gRL`                              |
//! | `Triangle`            | 𝔻      | `gL ⧏ gR`                                |
//!
//! Members of the system satisfy every property outright.

use alloc::vec::Vec;

use crate::canonical::NumberSystem;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::game::{GameId, GameStore, Player};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuideOptions {
    pub left: Vec<GameId>,
    pub right: Vec<GameId>,
    pub system: NumberSystem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    DiamondA(NumberSystem),
    Diamond,
    DiamondLeq,
    DiamondLeftLfuzzy,
    DiamondRightLfuzzy,
    DiamondLeftLeq,
    DiamondRightLeq,
    Triangle,
}

impl Property {
    /// The properties certified through second moves or guide comparison,
    /// i.e. everything but `DiamondA`.
    pub const VARIANTS: [Property; 7] = [
        Property::Diamond,
        Property::DiamondLeq,
        Property::DiamondLeftLfuzzy,
        Property::DiamondRightLfuzzy,
        Property::DiamondLeftLeq,
        Property::DiamondRightLeq,
        Property::Triangle,
    ];

    /// Variants that are instances of the integer diamond property.
    pub const INTEGER_VARIANTS: [Property; 4] = [
        Property::Diamond,
        Property::DiamondLeq,
        Property::DiamondLeftLfuzzy,
        Property::DiamondRightLfuzzy,
    ];

    pub fn system(self) -> NumberSystem {
        match self {
            Property::DiamondA(a) => a,
            Property::Diamond
            | Property::DiamondLeq
            | Property::DiamondLeftLfuzzy
            | Property::DiamondRightLfuzzy => NumberSystem::Integers,
            Property::DiamondLeftLeq | Property::DiamondRightLeq | Property::Triangle => {
                NumberSystem::Dyadics
            }
        }
    }

    pub fn is_variant(self) -> bool {
        !matches!(self, Property::DiamondA(_))
    }

    /// Short command-line code.
    pub fn code(self) -> &'static str {
        match self {
            Property::DiamondA(NumberSystem::Integers) => "dz",
            Property::DiamondA(NumberSystem::Dyadics) => "dd",
            Property::Diamond => "d",
            Property::DiamondLeq => "dleq",
            Property::DiamondLeftLfuzzy => "dl-lfuz",
            Property::DiamondRightLfuzzy => "dr-lfuz",
            Property::DiamondLeftLeq => "dl-leq",
            Property::DiamondRightLeq => "dr-leq",
            Property::Triangle => "tri",
        }
    }

    pub fn from_code(code: &str) -> Option<Property> {
        [Property::DiamondA(NumberSystem::Integers), Property::DiamondA(NumberSystem::Dyadics)]
            .into_iter()
            .chain(Property::VARIANTS)
            .find(|p| p.code() == code)
    }
}

/// The pieces that certify a property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub guide_left: GameId,
    pub guide_right: GameId,
    /// The number strictly between the guides (`DiamondA` only).
    pub number: Option<Dyadic>,
    /// `G^{LR}`: a Right option of `guide_left`.
    pub left_reply: Option<GameId>,
    /// `G^{RL}`: a Left option of `guide_right`.
    pub right_reply: Option<GameId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub holds: bool,
    /// Holds through membership in the property's number system.
    pub member: bool,
    pub witness: Option<Witness>,
    /// The number search hit its denominator bound before it was complete.
    pub search_exhausted: bool,
}

impl PropertyReport {
    fn membership() -> Self {
        PropertyReport {
            holds: true,
            member: true,
            witness: None,
            search_exhausted: false,
        }
    }

    fn found(witness: Option<Witness>) -> Self {
        PropertyReport {
            holds: witness.is_some(),
            member: false,
            witness,
            search_exhausted: false,
        }
    }
}

/// `all` split into `d_part` and `s_part`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedSetPartition {
    pub all: Vec<GameId>,
    pub d_part: Vec<GameId>,
    pub s_part: Vec<GameId>,
}

impl ClosedSetPartition {
    /// `s_part` becomes `all \ d_part`.
    pub fn from_d_part(all: Vec<GameId>, d_part: Vec<GameId>) -> Self {
        let mut all = all;
        all.sort_unstable();
        all.dedup();
        let mut d_part = d_part;
        d_part.sort_unstable();
        d_part.dedup();
        let s_part = all
            .iter()
            .copied()
            .filter(|g| d_part.binary_search(g).is_err())
            .collect();
        ClosedSetPartition { all, d_part, s_part }
    }

    /// The trivial split with everything in `d_part`.
    pub fn all_in_d(all: Vec<GameId>) -> Self {
        let d = all.clone();
        ClosedSetPartition::from_d_part(all, d)
    }
}

/// Hypotheses of the closed-set theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// Every member of `D` has the property.
    A,
    /// Options of `S` members lie in `D`.
    B,
    /// Second moves (`G^{LR}`, `G^{RL}`) of `D` members lie in `D`.
    C,
}

/// Conclusions of the closed-set theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    /// Every member is in `A` or `<A|A>`.
    PairSet,
    /// Every member of `D` is in `A`.
    Member,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedSetReport {
    pub hypothesis_violation: Option<(Condition, GameId)>,
    pub conclusion_violation: Option<(Conclusion, GameId)>,
    pub checked: usize,
}

impl ClosedSetReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypothesis_violation.is_none()
    }

    pub fn conclusions_hold(&self) -> bool {
        self.conclusion_violation.is_none()
    }

    /// The theorem is not contradicted: failed hypotheses or held conclusions.
    pub fn is_consistent(&self) -> bool {
        !self.hypotheses_hold() || self.conclusions_hold()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Implication {
    pub premises: bool,
    pub conclusion: bool,
}

impl Implication {
    pub fn holds(self) -> bool {
        !self.premises || self.conclusion
    }
}

/// Both halves of the stop/number transfer lemma for a concrete
/// `(g0, g1, x)`:
/// `RS(g1) <= RS(g0) and g0 ⧏ x  =>  g1 ⧏ x`, and dually
/// `LS(g1) >= LS(g0) and g0 ⧐ x  =>  g1 ⧐ x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma1Instance {
    pub lower: Implication,
    pub upper: Implication,
}

impl Lemma1Instance {
    pub fn holds(self) -> bool {
        self.lower.holds() && self.upper.holds()
    }
}

impl GameStore {
    pub fn guide_options(&mut self, g: GameId, system: NumberSystem) -> Result<GuideOptions> {
        if self.as_number(g, system).is_some() {
            return Ok(GuideOptions {
                left: Vec::new(),
                right: Vec::new(),
                system,
            });
        }
        let left = self.guide_side(g, system, Player::Left)?;
        let right = self.guide_side(g, system, Player::Right)?;
        Ok(GuideOptions { left, right, system })
    }

    fn guide_side(&mut self, g: GameId, system: NumberSystem, player: Player) -> Result<Vec<GameId>> {
        let target = match player {
            Player::Left => self.left_stop(g, system)?,
            Player::Right => self.right_stop(g, system)?,
        };
        let options = self.options(g, player).to_vec();
        let exact: Vec<GameId> = options
            .iter()
            .copied()
            .filter(|&o| self.number_value(o) == Some(target))
            .collect();
        if !exact.is_empty() {
            return Ok(exact);
        }
        let mut realizing = Vec::new();
        for o in options {
            let s = match player {
                Player::Left => self.right_stop(o, system)?,
                Player::Right => self.left_stop(o, system)?,
            };
            if s == target {
                realizing.push(o);
            }
        }
        Ok(realizing)
    }

    pub fn has_diamond_a(&mut self, g: GameId, system: NumberSystem) -> Result<PropertyReport> {
        if self.as_number(g, system).is_some() {
            return Ok(PropertyReport::membership());
        }
        let guides = self.guide_options(g, system)?;
        let mut exhausted = false;
        for &gl in &guides.left {
            for &gr in &guides.right {
                match self.simplest_between(&[gl], &[gr], system) {
                    Ok(Some(x)) => {
                        return Ok(PropertyReport::found(Some(Witness {
                            guide_left: gl,
                            guide_right: gr,
                            number: Some(x),
                            left_reply: None,
                            right_reply: None,
                        })))
                    }
                    Ok(None) => {}
                    Err(Error::SearchExhausted { .. }) => exhausted = true,
                    Err(e) => return Err(e),
                }
            }
        }
        let mut report = PropertyReport::found(None);
        report.search_exhausted = exhausted;
        Ok(report)
    }

    pub fn has_property(&mut self, g: GameId, property: Property) -> Result<PropertyReport> {
        if let Property::DiamondA(system) = property {
            return self.has_diamond_a(g, system);
        }
        let system = property.system();
        if self.as_number(g, system).is_some() {
            return Ok(PropertyReport::membership());
        }
        let guides = self.guide_options(g, system)?;
        for &gl in &guides.left {
            for &gr in &guides.right {
                if let Some(w) = self.certify(gl, gr, property) {
                    return Ok(PropertyReport::found(Some(w)));
                }
            }
        }
        Ok(PropertyReport::found(None))
    }

    /// Exhaustive search for a certificate on one guide pair.
    fn certify(&mut self, gl: GameId, gr: GameId, property: Property) -> Option<Witness> {
        let glr = self.right_options(gl).to_vec();
        let grl = self.left_options(gr).to_vec();
        let witness = |left_reply, right_reply| Witness {
            guide_left: gl,
            guide_right: gr,
            number: None,
            left_reply,
            right_reply,
        };
        match property {
            Property::Diamond => glr
                .iter()
                .find(|h| grl.binary_search(h).is_ok())
                .map(|&h| witness(Some(h), Some(h))),
            Property::DiamondLeq => {
                for &a in &glr {
                    for &b in &grl {
                        if self.leq(a, b) {
                            return Some(witness(Some(a), Some(b)));
                        }
                    }
                }
                None
            }
            Property::DiamondLeftLfuzzy => glr
                .into_iter()
                .find(|&a| self.lfuzzy(a, gr))
                .map(|a| witness(Some(a), None)),
            Property::DiamondRightLfuzzy => grl
                .into_iter()
                .find(|&b| self.lfuzzy(gl, b))
                .map(|b| witness(None, Some(b))),
            Property::DiamondLeftLeq => glr
                .into_iter()
                .find(|&a| self.leq(a, gr))
                .map(|a| witness(Some(a), None)),
            Property::DiamondRightLeq => grl
                .into_iter()
                .find(|&b| self.leq(gl, b))
                .map(|b| witness(None, Some(b))),
            Property::Triangle => self.lfuzzy(gl, gr).then(|| witness(None, None)),
            Property::DiamondA(_) => unreachable!("handled by has_diamond_a"),
        }
    }

    /// Re-checks a positive report from scratch with direct comparisons.
    pub fn recheck_report(&mut self, g: GameId, property: Property, report: &PropertyReport) -> Result<bool> {
        let system = property.system();
        if !report.holds {
            return Ok(false);
        }
        if report.member {
            return Ok(self.as_number(g, system).is_some());
        }
        let Some(w) = report.witness else {
            return Ok(false);
        };
        let guides = self.guide_options(g, system)?;
        if !guides.left.contains(&w.guide_left) || !guides.right.contains(&w.guide_right) {
            return Ok(false);
        }
        let reply_ok = |store: &GameStore, reply: Option<GameId>, parent: GameId, player: Player| {
            reply.map_or(true, |r| store.options(parent, player).contains(&r))
        };
        if !reply_ok(self, w.left_reply, w.guide_left, Player::Right)
            || !reply_ok(self, w.right_reply, w.guide_right, Player::Left)
        {
            return Ok(false);
        }
        let (gl, gr) = (w.guide_left, w.guide_right);
        Ok(match (property, w.left_reply, w.right_reply, w.number) {
            (Property::DiamondA(a), _, _, Some(x)) => {
                let xg = self.number(x);
                a.contains(x) && self.lfuzzy(gl, xg) && self.lfuzzy(xg, gr)
            }
            (Property::Diamond, Some(a), Some(b), _) => a == b,
            (Property::DiamondLeq, Some(a), Some(b), _) => self.leq(a, b),
            (Property::DiamondLeftLfuzzy, Some(a), _, _) => self.lfuzzy(a, gr),
            (Property::DiamondRightLfuzzy, _, Some(b), _) => self.lfuzzy(gl, b),
            (Property::DiamondLeftLeq, Some(a), _, _) => self.leq(a, gr),
            (Property::DiamondRightLeq, _, Some(b), _) => self.leq(gl, b),
            (Property::Triangle, _, _, _) => self.lfuzzy(gl, gr),
            _ => false,
        })
    }

    /// Checks the hypotheses and the conclusions of the closed-set theorem
    /// for `property` over `system`. Condition (c) is only a hypothesis for
    /// the variant properties. Offenders are reported lowest id first.
    pub fn verify_closed_set(
        &mut self,
        part: &ClosedSetPartition,
        system: NumberSystem,
        property: Property,
    ) -> Result<ClosedSetReport> {
        let in_all = |g: GameId| part.all.binary_search(&g).is_ok();
        let in_d = |g: GameId| part.d_part.binary_search(&g).is_ok();
        for &g in &part.all {
            for &o in self.left_options(g).iter().chain(self.right_options(g)) {
                if !in_all(o) {
                    return Err(Error::NotClosed { member: g, missing: o });
                }
            }
            let d = in_d(g);
            let s = part.s_part.binary_search(&g).is_ok();
            if d == s {
                return Err(Error::InvalidPartition(g));
            }
        }
        if part.d_part.iter().chain(&part.s_part).any(|&g| !in_all(g)) {
            let g = part.d_part.iter().chain(&part.s_part).copied().find(|&g| !in_all(g));
            return Err(Error::InvalidPartition(g.unwrap_or(GameId::ZERO)));
        }

        let mut hypothesis_violation = None;
        'a: for &g in &part.d_part {
            if !self.has_property(g, property)?.holds {
                hypothesis_violation = Some((Condition::A, g));
                break 'a;
            }
        }
        if hypothesis_violation.is_none() {
            hypothesis_violation = part
                .s_part
                .iter()
                .copied()
                .find(|&g| {
                    self.left_options(g)
                        .iter()
                        .chain(self.right_options(g))
                        .any(|&o| !in_d(o))
                })
                .map(|g| (Condition::B, g));
        }
        if hypothesis_violation.is_none() && property.is_variant() {
            hypothesis_violation = part
                .d_part
                .iter()
                .copied()
                .find(|&g| self.second_moves(g).into_iter().any(|o| !in_d(o)))
                .map(|g| (Condition::C, g));
        }

        let mut conclusion_violation = None;
        for &g in &part.all {
            if !self.classify_value(g).in_pair_set(system) {
                conclusion_violation = Some((Conclusion::PairSet, g));
                break;
            }
        }
        if conclusion_violation.is_none() {
            conclusion_violation = part
                .d_part
                .iter()
                .copied()
                .find(|&g| self.as_number(g, system).is_none())
                .map(|g| (Conclusion::Member, g));
        }
        Ok(ClosedSetReport {
            hypothesis_violation,
            conclusion_violation,
            checked: part.all.len(),
        })
    }

    /// `G^{LR}` and `G^{RL}` positions of `g`.
    pub fn second_moves(&self, g: GameId) -> Vec<GameId> {
        let mut out: Vec<GameId> = self
            .left_options(g)
            .iter()
            .flat_map(|&l| self.right_options(l).iter().copied())
            .chain(
                self.right_options(g)
                    .iter()
                    .flat_map(|&r| self.left_options(r).iter().copied()),
            )
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Evaluates both halves of the transfer lemma with no restriction on
    /// the inputs.
    pub fn lemma1_instance(
        &mut self,
        g0: GameId,
        g1: GameId,
        x: Dyadic,
        system: NumberSystem,
    ) -> Result<Lemma1Instance> {
        let xg = self.number(x);
        let (ls0, rs0) = self.stops(g0, system)?;
        let (ls1, rs1) = self.stops(g1, system)?;
        let lower = Implication {
            premises: rs1 <= rs0 && self.lfuzzy(g0, xg),
            conclusion: self.lfuzzy(g1, xg),
        };
        let upper = Implication {
            premises: ls1 >= ls0 && self.lfuzzy(xg, g0),
            conclusion: self.lfuzzy(xg, g1),
        };
        Ok(Lemma1Instance { lower, upper })
    }

    /// The lemma on an admissible instance: `g0` in `A` or `<A|A>`, `g1` in
    /// `<A|A>` but not in `A`, `x` in `A`.
    pub fn check_lemma1_instance(
        &mut self,
        g0: GameId,
        g1: GameId,
        x: Dyadic,
        system: NumberSystem,
    ) -> Result<bool> {
        if !system.contains(x) {
            return Err(Error::Precondition("x is not in the number system"));
        }
        if !self.classify_value(g0).in_pair_set(system) {
            return Err(Error::Precondition("g0 must lie in A or <A|A>"));
        }
        if self.as_number(g1, system).is_some() {
            return Err(Error::Precondition("g1 must not be a member of A"));
        }
        if !self.classify_value(g1).in_pair_set(system) {
            return Err(Error::Precondition("g1 must lie in <A|A>"));
        }
        Ok(self.lemma1_instance(g0, g1, x, system)?.holds())
    }
}
