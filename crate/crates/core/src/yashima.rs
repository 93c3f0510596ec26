//! Yashima and Tron on undirected multigraphs.
//!
//! Each player owns one token. A move slides the mover's token along an
//! edge to a neighbor that the opponent's token does not occupy. In Yashima
//! the traversed edge copy is deleted; in Tron the vertex just left is
//! deleted together with every edge touching it. Whoever cannot move loses.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::canonical::{NumberSystem, ValueClass};
use crate::error::{Error, Result};
use crate::game::{GameId, GameStore, Player};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Variant {
    Yashima,
    Tron,
}

/// Undirected multigraph without self-loops. Edges are stored as a sorted
/// multiset of `(u, v)` with `u < v`, so equal graphs compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
    deleted: Vec<bool>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if u32::try_from(vertex_count).is_err() {
            return Err(Error::InvalidState("too many vertices"));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidState("edge endpoint out of range"));
            }
            if u == v {
                return Err(Error::InvalidState("self-loop"));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            list.push((a as u32, b as u32));
        }
        list.sort_unstable();
        Ok(MultiGraph {
            vertex_count,
            edges: list,
            deleted: vec![false; vertex_count],
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Vertices not removed by Tron moves.
    pub fn live_vertex_count(&self) -> usize {
        self.deleted.iter().filter(|d| !**d).count()
    }

    pub fn is_deleted(&self, v: usize) -> bool {
        self.deleted[v]
    }

    /// Edge multiset, sorted, each pair with the smaller endpoint first.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = if u < v { (u as u32, v as u32) } else { (v as u32, u as u32) };
        self.edges.iter().filter(|&&e| e == key).count()
    }

    /// Distinct neighbors of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let v = v as u32;
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b as usize)
                } else if b == v {
                    Some(a as usize)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn remove_edge_copy(&mut self, u: usize, v: usize) -> bool {
        let key = if u < v { (u as u32, v as u32) } else { (v as u32, u as u32) };
        match self.edges.binary_search(&key) {
            Ok(i) => {
                self.edges.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    fn delete_vertex(&mut self, v: usize) {
        let v32 = v as u32;
        self.edges.retain(|&(a, b)| a != v32 && b != v32);
        self.deleted[v] = true;
    }

    /// A proper 2-coloring per component, or `None` if some component has an
    /// odd cycle. Each component's first vertex gets color 0.
    pub fn two_coloring(&self) -> Option<(Vec<u8>, Vec<usize>)> {
        let n = self.vertex_count;
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b as usize);
            adj[b as usize].push(a as usize);
        }
        let mut color = vec![u8::MAX; n];
        let mut component = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            component[start] = start;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        component[w] = start;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some((color, component))
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ColorClass {
    DifferentColor,
    SameColor,
    NotBipartite,
}

/// One token slide.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Move {
    pub player: Player,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct YashimaState {
    graph: MultiGraph,
    left: u32,
    right: u32,
    variant: Variant,
}

impl YashimaState {
    pub fn new(graph: MultiGraph, left: usize, right: usize, variant: Variant) -> Result<Self> {
        if left >= graph.vertex_count || right >= graph.vertex_count {
            return Err(Error::InvalidState("token vertex out of range"));
        }
        if left == right {
            return Err(Error::InvalidState("tokens share a vertex"));
        }
        if graph.deleted[left] || graph.deleted[right] {
            return Err(Error::InvalidState("token on a deleted vertex"));
        }
        Ok(YashimaState {
            graph,
            left: left as u32,
            right: right as u32,
            variant,
        })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn token(&self, player: Player) -> usize {
        match player {
            Player::Left => self.left as usize,
            Player::Right => self.right as usize,
        }
    }

    /// Distinct moves for `player`; parallel edges give one move.
    pub fn moves(&self, player: Player) -> Vec<Move> {
        let from = self.token(player);
        let blocked = self.token(player.opponent());
        self.graph
            .neighbors(from)
            .into_iter()
            .filter(|&to| to != blocked)
            .map(|to| Move { player, from, to })
            .collect()
    }

    /// The state after `mv`, or `None` if `mv` is not legal here.
    pub fn apply(&self, mv: Move) -> Option<YashimaState> {
        if self.token(mv.player) != mv.from || self.token(mv.player.opponent()) == mv.to || mv.from == mv.to {
            return None;
        }
        let mut next = self.clone();
        match self.variant {
            Variant::Yashima => {
                if !next.graph.remove_edge_copy(mv.from, mv.to) {
                    return None;
                }
            }
            Variant::Tron => {
                if self.graph.multiplicity(mv.from, mv.to) == 0 {
                    return None;
                }
                next.graph.delete_vertex(mv.from);
            }
        }
        match mv.player {
            Player::Left => next.left = mv.to as u32,
            Player::Right => next.right = mv.to as u32,
        }
        Some(next)
    }

    /// Successor states for `player`, deduplicated.
    pub fn legal_moves(&self, player: Player) -> Vec<YashimaState> {
        self.moves(player)
            .into_iter()
            .filter_map(|m| self.apply(m))
            .collect()
    }

    pub fn classify(&self) -> ColorClass {
        match self.graph.two_coloring() {
            None => ColorClass::NotBipartite,
            Some((color, component)) => {
                let (l, r) = (self.left as usize, self.right as usize);
                if component[l] != component[r] || color[l] != color[r] {
                    ColorClass::DifferentColor
                } else {
                    ColorClass::SameColor
                }
            }
        }
    }
}

/// Translates states to interned positions, sharing transpositions.
#[derive(Default)]
pub struct YashimaSolver {
    memo: HashMap<YashimaState, GameId>,
}

impl YashimaSolver {
    pub fn new() -> Self {
        YashimaSolver::default()
    }

    /// Distinct states translated so far.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn to_game(&mut self, store: &mut GameStore, state: &YashimaState) -> GameId {
        if let Some(&g) = self.memo.get(state) {
            return g;
        }
        let left: Vec<GameId> = state
            .legal_moves(Player::Left)
            .iter()
            .map(|s| self.to_game(store, s))
            .collect();
        let right: Vec<GameId> = state
            .legal_moves(Player::Right)
            .iter()
            .map(|s| self.to_game(store, s))
            .collect();
        let g = store.intern(left, right);
        self.memo.insert(state.clone(), g);
        g
    }
}

/// Node count of the fully expanded game tree below `state`, root included.
/// Each distinct successor state is one child; nothing is shared between
/// branches.
pub fn tree_size(state: &YashimaState) -> u64 {
    fn go(state: &YashimaState, memo: &mut HashMap<YashimaState, u64>) -> u64 {
        if let Some(&n) = memo.get(state) {
            return n;
        }
        let mut n: u64 = 1;
        for player in [Player::Left, Player::Right] {
            for next in state.legal_moves(player) {
                n = n.saturating_add(go(&next, memo));
            }
        }
        memo.insert(state.clone(), n);
        n
    }
    go(state, &mut HashMap::new())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveStats {
    pub expanded_nodes: u64,
    pub memo_entries: usize,
    pub value: ValueClass,
    /// Canonical form of the root.
    pub canonical: GameId,
}

pub fn solve_stats(store: &mut GameStore, state: &YashimaState) -> SolveStats {
    let mut solver = YashimaSolver::new();
    let root = solver.to_game(store, state);
    let canonical = store.canonical_form(root);
    SolveStats {
        expanded_nodes: tree_size(state),
        memo_entries: solver.memo_len(),
        value: store.classify_value(root),
        canonical,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub variant: Variant,
    /// Refuse enumerations estimated above this many states.
    pub budget: u64,
}

impl EnumerationBounds {
    pub fn new(max_vertices: usize, max_edges: usize, variant: Variant) -> Self {
        EnumerationBounds {
            max_vertices,
            max_edges,
            variant,
            budget: 5_000_000,
        }
    }

    /// Upper estimate of the number of (graph, placement) states, counting
    /// non-bipartite graphs too.
    pub fn estimate(&self) -> u64 {
        let mut total: u64 = 0;
        for n in 2..=self.max_vertices as u64 {
            let pairs = n * (n - 1) / 2;
            // multisets of size <= max_edges over `pairs` kinds
            let graphs = binomial(pairs + self.max_edges as u64, pairs);
            total = total.saturating_add(graphs.saturating_mul(n * (n - 1)));
        }
        total
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    NotBipartite,
    /// A different-color state whose value is not an integer.
    NotInteger,
    /// Some Left move and Right move fail to commute to one position.
    NotCommuting,
    /// Value is neither an integer nor an integer pair.
    NotIntegerPair,
}

/// Failures per [`Violation`]; one state can add to several.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ViolationCounts {
    pub not_bipartite: u64,
    pub not_integer: u64,
    pub not_commuting: u64,
    pub not_integer_pair: u64,
}

impl ViolationCounts {
    fn bump(&mut self, v: Violation) {
        match v {
            Violation::NotBipartite => self.not_bipartite += 1,
            Violation::NotInteger => self.not_integer += 1,
            Violation::NotCommuting => self.not_commuting += 1,
            Violation::NotIntegerPair => self.not_integer_pair += 1,
        }
    }

    pub fn get(&self, v: Violation) -> u64 {
        match v {
            Violation::NotBipartite => self.not_bipartite,
            Violation::NotInteger => self.not_integer,
            Violation::NotCommuting => self.not_commuting,
            Violation::NotIntegerPair => self.not_integer_pair,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub state: YashimaState,
    pub violation: Violation,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationReport {
    pub graphs: u64,
    pub states: u64,
    pub different_color: u64,
    pub same_color: u64,
    /// (Left move, Right move) pairs checked from different-color states.
    pub commuting_pairs: u64,
    /// States with at least one violation.
    pub counterexamples: u64,
    pub violations: ViolationCounts,
    pub first_counterexample: Option<Counterexample>,
    /// Distinct states the solver translated.
    pub solver_states: usize,
}

/// Exhaustively checks every bipartite multigraph within `bounds` and every
/// token placement on it: values lie in `<Z|Z>`, different-color states are
/// integers, and from different-color states each Left move and Right move
/// can be played in either order to reach one interned position.
pub fn verify_corollary5(store: &mut GameStore, bounds: EnumerationBounds) -> Result<EnumerationReport> {
    let estimate = bounds.estimate();
    if estimate > bounds.budget {
        return Err(Error::BoundsTooLarge {
            estimate,
            budget: bounds.budget,
        });
    }
    let mut solver = YashimaSolver::new();
    let mut report = EnumerationReport::default();
    for n in 2..=bounds.max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut counts = vec![0usize; pairs.len()];
        loop {
            let graph = MultiGraph::new(
                n,
                pairs
                    .iter()
                    .zip(&counts)
                    .flat_map(|(&p, &c)| core::iter::repeat(p).take(c)),
            )?;
            if graph.is_bipartite() {
                report.graphs += 1;
                for l in 0..n {
                    for r in 0..n {
                        if l != r {
                            let state = YashimaState::new(graph.clone(), l, r, bounds.variant)?;
                            check_state(store, &mut solver, &state, &mut report);
                        }
                    }
                }
            }
            if !next_multiset(&mut counts, bounds.max_edges) {
                break;
            }
        }
    }
    report.solver_states = solver.memo_len();
    Ok(report)
}

/// Odometer over multiplicity vectors with total at most `max_total`.
fn next_multiset(counts: &mut [usize], max_total: usize) -> bool {
    let total: usize = counts.iter().sum();
    if total < max_total {
        if let Some(first) = counts.first_mut() {
            *first += 1;
            return true;
        }
        return false;
    }
    for i in 0..counts.len() {
        if counts[i] > 0 {
            counts[i] = 0;
            if i + 1 < counts.len() {
                counts[i + 1] += 1;
                return true;
            }
            return false;
        }
    }
    false
}

fn check_state(store: &mut GameStore, solver: &mut YashimaSolver, state: &YashimaState, report: &mut EnumerationReport) {
    report.states += 1;
    let mut found: Vec<Violation> = Vec::new();
    let g = solver.to_game(store, state);
    let class = state.classify();
    match class {
        ColorClass::NotBipartite => found.push(Violation::NotBipartite),
        ColorClass::SameColor => report.same_color += 1,
        ColorClass::DifferentColor => report.different_color += 1,
    }
    if class != ColorClass::NotBipartite && !store.classify_value(g).in_pair_set(NumberSystem::Integers) {
        found.push(Violation::NotIntegerPair);
    }
    if class == ColorClass::DifferentColor {
        if store.as_number(g, NumberSystem::Integers).is_none() {
            found.push(Violation::NotInteger);
        }
        let mut commutes = true;
        for ml in state.moves(Player::Left) {
            for mr in state.moves(Player::Right) {
                report.commuting_pairs += 1;
                if !moves_commute(store, solver, state, ml, mr) {
                    commutes = false;
                }
            }
        }
        if !commutes {
            found.push(Violation::NotCommuting);
        }
    }
    if let Some(&first) = found.first() {
        report.counterexamples += 1;
        for &v in &found {
            report.violations.bump(v);
        }
        if report.first_counterexample.is_none() {
            report.first_counterexample = Some(Counterexample {
                state: state.clone(),
                violation: first,
            });
        }
    }
}

/// Both orders of `ml` and `mr` are legal and reach the same position.
pub fn moves_commute(
    store: &mut GameStore,
    solver: &mut YashimaSolver,
    state: &YashimaState,
    ml: Move,
    mr: Move,
) -> bool {
    let lr = state.apply(ml).and_then(|s| s.apply(mr));
    let rl = state.apply(mr).and_then(|s| s.apply(ml));
    match (lr, rl) {
        (Some(a), Some(b)) => a == b && solver.to_game(store, &a) == solver.to_game(store, &b),
        _ => false,
    }
}
