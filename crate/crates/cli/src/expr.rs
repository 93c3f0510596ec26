//! Braces notation for short games.
//!
//! ```text
//! game   := number | "*" | "{" list "|" list "}"
//! list   := (game ("," game)*)?
//! number := integer | integer "/" power-of-two
//! ```
//!
//! Whitespace is insignificant. Printing goes the other way on canonical
//! forms: numbers become numerals, `{0|0}` becomes `*`, and everything else
//! is written in braces.

use std::fmt;

use cgt_diamond_core::{Dyadic, GameId, GameStore};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameExpr {
    Number(Dyadic),
    Star,
    Braces(Vec<GameExpr>, Vec<GameExpr>),
}

impl fmt::Display for GameExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameExpr::Number(x) => write!(f, "{x}"),
            GameExpr::Star => f.write_str("*"),
            GameExpr::Braces(l, r) => {
                f.write_str("{")?;
                write_list(f, l)?;
                f.write_str("|")?;
                write_list(f, r)?;
                f.write_str("}")
            }
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[GameExpr]) -> fmt::Result {
    for (i, e) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

pub fn parse_game(text: &str) -> Result<GameExpr, CliError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        col: 1,
    };
    let e = p.game()?;
    p.skip_ws();
    if p.peek().is_some() {
        return Err(p.error("end of input"));
    }
    Ok(e)
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, expected: &str) -> CliError {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        CliError::Parse {
            line: self.line,
            column: self.col,
            message: format!("expected {expected}, found {found}"),
        }
    }

    fn game(&mut self) -> Result<GameExpr, CliError> {
        self.skip_ws();
        match self.peek() {
            Some('*') => {
                self.bump();
                Ok(GameExpr::Star)
            }
            Some('{') => {
                self.bump();
                let left = self.list('|')?;
                self.bump();
                let right = self.list('}')?;
                self.bump();
                Ok(GameExpr::Braces(left, right))
            }
            Some(c) if c == '-' || c.is_ascii_digit() => self.number(),
            _ => Err(self.error("a number, '*' or '{'")),
        }
    }

    /// Parses games up to (not including) `close`.
    fn list(&mut self, close: char) -> Result<Vec<GameExpr>, CliError> {
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(close) {
            return Ok(items);
        }
        loop {
            items.push(self.game()?);
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.bump();
                }
                Some(c) if c == close => return Ok(items),
                _ => return Err(self.error(&format!("',' or '{close}'"))),
            }
        }
    }

    fn digits(&mut self) -> Result<(String, usize, usize), CliError> {
        let (line, col) = (self.line, self.col);
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        if s.is_empty() {
            return Err(self.error("a digit"));
        }
        Ok((s, line, col))
    }

    fn number(&mut self) -> Result<GameExpr, CliError> {
        let (line, column) = (self.line, self.col);
        let negative = self.peek() == Some('-');
        if negative {
            self.bump();
        }
        let (digits, _, _) = self.digits()?;
        let out_of_range = || CliError::Parse {
            line,
            column,
            message: "number out of range".to_string(),
        };
        let mut n: i64 = digits.parse().map_err(|_| out_of_range())?;
        if negative {
            n = -n;
        }
        let mut exponent = 0;
        if self.peek() == Some('/') {
            self.bump();
            let (den, dline, dcol) = self.digits()?;
            let non_dyadic = || CliError::NonDyadicDenominator {
                line: dline,
                column: dcol,
                denominator: den.clone(),
            };
            let d: u64 = den.parse().map_err(|_| non_dyadic())?;
            if !d.is_power_of_two() {
                return Err(non_dyadic());
            }
            exponent = d.trailing_zeros();
        }
        let x = Dyadic::new(n, exponent).ok_or_else(out_of_range)?;
        Ok(GameExpr::Number(x))
    }
}

/// Builds the position for `e`; numbers get their canonical trees.
pub fn elaborate(store: &mut GameStore, e: &GameExpr) -> GameId {
    match e {
        GameExpr::Number(x) => store.number(*x),
        GameExpr::Star => store.star(),
        GameExpr::Braces(l, r) => {
            let left: Vec<GameId> = l.iter().map(|x| elaborate(store, x)).collect();
            let right: Vec<GameId> = r.iter().map(|x| elaborate(store, x)).collect();
            store.intern(left, right)
        }
    }
}

/// The canonical form of `g` as an expression.
pub fn canonical_expr(store: &mut GameStore, g: GameId) -> GameExpr {
    let c = store.canonical_form(g);
    if let Some(x) = store.number_value(c) {
        return GameExpr::Number(x);
    }
    if c == store.star() {
        return GameExpr::Star;
    }
    braces_of(store, c)
}

/// `g`'s canonical form with its top level always in braces.
pub fn canonical_braces(store: &mut GameStore, g: GameId) -> GameExpr {
    let c = store.canonical_form(g);
    braces_of(store, c)
}

fn braces_of(store: &mut GameStore, c: GameId) -> GameExpr {
    let l = store.left_options(c).to_vec();
    let r = store.right_options(c).to_vec();
    GameExpr::Braces(
        l.into_iter().map(|o| canonical_expr(store, o)).collect(),
        r.into_iter().map(|o| canonical_expr(store, o)).collect(),
    )
}

pub fn print_value(store: &mut GameStore, g: GameId) -> String {
    canonical_expr(store, g).to_string()
}
