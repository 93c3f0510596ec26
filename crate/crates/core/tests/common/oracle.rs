//! Brute-force reference implementations used only by tests.
//!
//! Nothing here touches the engine: games are plain option trees, comparison
//! is the unmemoized textbook recursion, and the Yashima/Tron rules are
//! re-derived from an adjacency-count matrix.
#![allow(dead_code)]

use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub struct Tree {
    pub left: Vec<Tree>,
    pub right: Vec<Tree>,
}

impl Tree {
    pub fn new(left: Vec<Tree>, right: Vec<Tree>) -> Self {
        Tree { left, right }
    }

    pub fn zero() -> Self {
        Tree::new(vec![], vec![])
    }

    pub fn star() -> Self {
        Tree::new(vec![Tree::zero()], vec![Tree::zero()])
    }

    /// Integer `m` in its usual tree form.
    pub fn integer(m: i64) -> Self {
        let mut t = Tree::zero();
        for _ in 0..m.unsigned_abs() {
            t = if m > 0 {
                Tree::new(vec![t], vec![])
            } else {
                Tree::new(vec![], vec![t])
            };
        }
        t
    }

    /// `n / 2^d` for odd `n` (or any integer when `d == 0`).
    pub fn dyadic(n: i64, d: u32) -> Self {
        if d == 0 {
            return Tree::integer(n);
        }
        let (lo, lo_d) = reduce(n - 1, d);
        let (hi, hi_d) = reduce(n + 1, d);
        Tree::new(vec![Tree::dyadic(lo, lo_d)], vec![Tree::dyadic(hi, hi_d)])
    }

    pub fn birthday(&self) -> u32 {
        self.left
            .iter()
            .chain(self.right.iter())
            .map(|t| t.birthday() + 1)
            .max()
            .unwrap_or(0)
    }
}

fn reduce(mut n: i64, mut d: u32) -> (i64, u32) {
    while d > 0 && n % 2 == 0 {
        n /= 2;
        d -= 1;
    }
    (n, d)
}

/// `g <= h` iff no Left option of `g` is `>= h` and no Right option of `h`
/// is `<= g`.
pub fn leq(g: &Tree, h: &Tree) -> bool {
    !g.left.iter().any(|gl| leq(h, gl)) && !h.right.iter().any(|hr| leq(hr, g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Less,
    Greater,
    Equal,
    Fuzzy,
}

pub fn compare(g: &Tree, h: &Tree) -> Rel {
    match (leq(g, h), leq(h, g)) {
        (true, true) => Rel::Equal,
        (true, false) => Rel::Less,
        (false, true) => Rel::Greater,
        (false, false) => Rel::Fuzzy,
    }
}

/// Outcome by direct minimax: does the player to move win?
pub fn left_moving_first_wins(g: &Tree) -> bool {
    g.left.iter().any(|gl| !right_moving_first_wins(gl))
}

pub fn right_moving_first_wins(g: &Tree) -> bool {
    g.right.iter().any(|gr| !left_moving_first_wins(gr))
}

/// Exact rational `num / den` with `den > 0`, for stop cross-checks.
pub fn cmp_rational(a: (i64, i64), b: (i64, i64)) -> Ordering {
    ((a.0 as i128) * (b.1 as i128)).cmp(&((b.0 as i128) * (a.1 as i128)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rules {
    Yashima,
    Tron,
}

/// Board as a symmetric matrix of edge multiplicities plus a dead-vertex mask.
#[derive(Clone, Debug)]
pub struct Board {
    pub counts: Vec<Vec<u32>>,
    pub dead: Vec<bool>,
    pub left: usize,
    pub right: usize,
    pub rules: Rules,
}

impl Board {
    pub fn new(n: usize, edges: &[(usize, usize)], left: usize, right: usize, rules: Rules) -> Self {
        let mut counts = vec![vec![0; n]; n];
        for &(u, v) in edges {
            counts[u][v] += 1;
            counts[v][u] += 1;
        }
        Board {
            counts,
            dead: vec![false; n],
            left,
            right,
            rules,
        }
    }

    fn step(&self, from: usize, to: usize) -> Board {
        let mut next = self.clone();
        match self.rules {
            Rules::Yashima => {
                next.counts[from][to] -= 1;
                next.counts[to][from] -= 1;
            }
            Rules::Tron => {
                for w in 0..next.counts.len() {
                    next.counts[from][w] = 0;
                    next.counts[w][from] = 0;
                }
                next.dead[from] = true;
            }
        }
        next
    }

    pub fn left_moves(&self) -> Vec<Board> {
        (0..self.counts.len())
            .filter(|&w| self.counts[self.left][w] > 0 && w != self.right)
            .map(|w| {
                let mut b = self.step(self.left, w);
                b.left = w;
                b
            })
            .collect()
    }

    pub fn right_moves(&self) -> Vec<Board> {
        (0..self.counts.len())
            .filter(|&w| self.counts[self.right][w] > 0 && w != self.left)
            .map(|w| {
                let mut b = self.step(self.right, w);
                b.right = w;
                b
            })
            .collect()
    }

    /// Full game tree, no sharing.
    pub fn tree(&self) -> Tree {
        Tree::new(
            self.left_moves().iter().map(Board::tree).collect(),
            self.right_moves().iter().map(Board::tree).collect(),
        )
    }
}
