//! Interned short game positions and the order between them.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::canonical::NumberSystem;
use crate::dyadic::Dyadic;

/// Handle to a position inside a [`GameStore`].
///
/// Ids are dense and assigned in creation order, so every option of a
/// position has a smaller id than the position itself.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GameId(u32);

impl GameId {
    /// `{ | }`, always the first position of every store.
    pub const ZERO: GameId = GameId(0);

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for GameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for GameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }
}

/// Exactly one of these holds between any two positions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Relation {
    Less,
    Greater,
    Equal,
    Fuzzy,
}

impl Relation {
    pub fn is_leq(self) -> bool {
        matches!(self, Relation::Less | Relation::Equal)
    }

    pub fn is_geq(self) -> bool {
        matches!(self, Relation::Greater | Relation::Equal)
    }

    /// Less than or fuzzy with.
    pub fn is_lfuzzy(self) -> bool {
        matches!(self, Relation::Less | Relation::Fuzzy)
    }

    /// Greater than or fuzzy with.
    pub fn is_gfuzzy(self) -> bool {
        matches!(self, Relation::Greater | Relation::Fuzzy)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Greater => ">",
            Relation::Equal => "=",
            Relation::Fuzzy => "||",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Outcome {
    LeftWins,
    RightWins,
    PreviousWins,
    NextWins,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Node {
    left: Box<[GameId]>,
    right: Box<[GameId]>,
}

/// Append-only store of hash-consed positions plus the memo tables every
/// analysis shares.
///
/// Two positions get the same [`GameId`] exactly when their game trees are
/// isomorphic: option lists are sorted and deduplicated before lookup, and
/// children are themselves interned.
pub struct GameStore {
    nodes: Vec<Node>,
    birthdays: Vec<u32>,
    index: HashMap<Node, GameId>,
    leq_memo: HashMap<(GameId, GameId), bool>,
    pub(crate) canonical_memo: HashMap<GameId, GameId>,
    pub(crate) number_memo: HashMap<GameId, Option<Dyadic>>,
    pub(crate) number_games: HashMap<Dyadic, GameId>,
    pub(crate) stop_memo: HashMap<(GameId, NumberSystem, Player), Dyadic>,
}

impl Default for GameStore {
    fn default() -> Self {
        GameStore::new()
    }
}

impl GameStore {
    pub fn new() -> Self {
        let mut store = GameStore {
            nodes: Vec::new(),
            birthdays: Vec::new(),
            index: HashMap::new(),
            leq_memo: HashMap::new(),
            canonical_memo: HashMap::new(),
            number_memo: HashMap::new(),
            number_games: HashMap::new(),
            stop_memo: HashMap::new(),
        };
        let zero = store.intern([], []);
        debug_assert_eq!(zero, GameId::ZERO);
        store
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Returns the id of `{ left | right }`, allocating it if no isomorphic
    /// position exists yet.
    ///
    /// Panics if an option id does not belong to this store.
    pub fn intern(
        &mut self,
        left: impl IntoIterator<Item = GameId>,
        right: impl IntoIterator<Item = GameId>,
    ) -> GameId {
        let left = self.normalize(left);
        let right = self.normalize(right);
        let node = Node { left, right };
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let id = GameId(u32::try_from(self.nodes.len()).expect("more than u32::MAX positions"));
        let birthday = node
            .left
            .iter()
            .chain(node.right.iter())
            .map(|o| self.birthdays[o.index()] + 1)
            .max()
            .unwrap_or(0);
        self.nodes.push(node.clone());
        self.birthdays.push(birthday);
        self.index.insert(node, id);
        id
    }

    fn normalize(&self, options: impl IntoIterator<Item = GameId>) -> Box<[GameId]> {
        let mut v: Vec<GameId> = options.into_iter().collect();
        for o in &v {
            assert!(o.index() < self.nodes.len(), "option {o} is not in this store");
        }
        v.sort_unstable();
        v.dedup();
        v.into_boxed_slice()
    }

    pub fn left_options(&self, g: GameId) -> &[GameId] {
        &self.nodes[g.index()].left
    }

    pub fn right_options(&self, g: GameId) -> &[GameId] {
        &self.nodes[g.index()].right
    }

    pub fn options(&self, g: GameId, player: Player) -> &[GameId] {
        match player {
            Player::Left => self.left_options(g),
            Player::Right => self.right_options(g),
        }
    }

    pub fn birthday(&self, g: GameId) -> u32 {
        self.birthdays[g.index()]
    }

    /// `*` as `{0 | 0}`.
    pub fn star(&mut self) -> GameId {
        self.intern([GameId::ZERO], [GameId::ZERO])
    }

    /// Standard recursion: `g <= h` unless some `gL >= h` or some `hR <= g`.
    pub fn leq(&mut self, g: GameId, h: GameId) -> bool {
        if g == h {
            return true;
        }
        if let Some(&known) = self.leq_memo.get(&(g, h)) {
            return known;
        }
        let mut result = true;
        let g_left = self.nodes[g.index()].left.clone();
        for gl in g_left.iter() {
            if self.leq(h, *gl) {
                result = false;
                break;
            }
        }
        if result {
            let h_right = self.nodes[h.index()].right.clone();
            for hr in h_right.iter() {
                if self.leq(*hr, g) {
                    result = false;
                    break;
                }
            }
        }
        self.leq_memo.insert((g, h), result);
        result
    }

    pub fn compare(&mut self, g: GameId, h: GameId) -> Relation {
        match (self.leq(g, h), self.leq(h, g)) {
            (true, true) => Relation::Equal,
            (true, false) => Relation::Less,
            (false, true) => Relation::Greater,
            (false, false) => Relation::Fuzzy,
        }
    }

    pub fn equal(&mut self, g: GameId, h: GameId) -> bool {
        self.compare(g, h) == Relation::Equal
    }

    /// `g` is less than or fuzzy with `h`, i.e. not `h <= g`.
    pub fn lfuzzy(&mut self, g: GameId, h: GameId) -> bool {
        !self.leq(h, g)
    }

    pub fn outcome(&mut self, g: GameId) -> Outcome {
        match self.compare(g, GameId::ZERO) {
            Relation::Greater => Outcome::LeftWins,
            Relation::Less => Outcome::RightWins,
            Relation::Equal => Outcome::PreviousWins,
            Relation::Fuzzy => Outcome::NextWins,
        }
    }

    /// Every position reachable from `roots` (roots included), in ascending
    /// id order.
    pub fn followers(&self, roots: impl IntoIterator<Item = GameId>) -> Vec<GameId> {
        let mut seen = alloc::vec![false; self.nodes.len()];
        let mut stack: Vec<GameId> = roots.into_iter().collect();
        let mut out = Vec::new();
        while let Some(g) = stack.pop() {
            if core::mem::replace(&mut seen[g.index()], true) {
                continue;
            }
            out.push(g);
            stack.extend(self.left_options(g).iter().chain(self.right_options(g)));
        }
        out.sort_unstable();
        out
    }

    /// Number of cached order comparisons.
    pub fn comparison_cache_len(&self) -> usize {
        self.leq_memo.len()
    }
}
