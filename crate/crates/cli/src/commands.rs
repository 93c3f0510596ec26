use std::path::Path;

use cgt_diamond_core::yashima::{solve_stats, verify_corollary5};
use cgt_diamond_core::{
    ColorClass, EnumerationBounds, GameId, GameStore, NumberSystem, Property, PropertyReport, Variant,
    YashimaSolver, YashimaState,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::expr::{canonical_braces, elaborate, parse_game, print_value};
use crate::graph_file::{parse_graph, print_graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cgt-diamond", version, about = "Values, stops and diamond checks for short partizan games")]
pub struct Cli {
    /// Emit {command, input, result, witnesses, counts} as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Canonical value of a braces expression or of a graph file.
    Value {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Canonical form, top level in braces.
    Canonical {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Prints <, >, = or ||.
    Compare {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Left and right stops.
    Stops {
        #[arg(long, value_enum, default_value = "d")]
        system: SystemArg,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Checks one diamond property and prints its witness.
    Diamond {
        #[arg(long, value_parser = parse_property)]
        property: Property,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Yashima and Tron positions read from graph files.
    #[command(subcommand)]
    Yashima(YashimaCommand),
}

#[derive(Subcommand, Debug)]
pub enum YashimaCommand {
    Value { file: String },
    Classify { file: String },
    Stats { file: String },
    /// Exhaustive check over small bipartite multigraphs.
    Verify {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        max_edges: usize,
        #[arg(long, value_enum, default_value = "yashima")]
        variant: VariantArg,
        /// Upper bound on the estimated work.
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SystemArg {
    Z,
    D,
}

impl From<SystemArg> for NumberSystem {
    fn from(s: SystemArg) -> Self {
        match s {
            SystemArg::Z => NumberSystem::Integers,
            SystemArg::D => NumberSystem::Dyadics,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VariantArg {
    Yashima,
    Tron,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Yashima => Variant::Yashima,
            VariantArg::Tron => Variant::Tron,
        }
    }
}

fn parse_property(s: &str) -> Result<Property, String> {
    Property::from_code(s).ok_or_else(|| {
        "expected one of dz, dd, d, dleq, dl-lfuz, dr-lfuz, dl-leq, dr-leq, tri".to_string()
    })
}

/// Everything a command produced; rendered as text or JSON by the caller.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub command: &'static str,
    pub input: String,
    pub result: Value,
    pub witnesses: Vec<Value>,
    pub counts: Map<String, Value>,
    pub lines: Vec<String>,
    pub exit: i32,
}

impl Outcome {
    fn new(command: &'static str, input: impl Into<String>) -> Self {
        Outcome {
            command,
            input: input.into(),
            result: Value::Null,
            witnesses: Vec::new(),
            counts: Map::new(),
            lines: Vec::new(),
            exit: EXIT_OK,
        }
    }

    fn text(mut self, line: impl Into<String>) -> Self {
        self.lines.push(line.into());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "input": self.input,
            "result": self.result,
            "witnesses": self.witnesses,
            "counts": self.counts,
        })
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            format!("{}\n", self.to_json())
        } else {
            let mut s = self.lines.join("\n");
            s.push('\n');
            s
        }
    }
}

/// JSON form of a failed command.
pub fn error_json(command: &str, input: &str, err: &CliError) -> Value {
    json!({
        "command": command,
        "input": input,
        "result": { "error": err.kind(), "message": err.to_string() },
        "witnesses": [],
        "counts": {},
    })
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Value { .. } => "value",
            Command::Canonical { .. } => "canonical",
            Command::Compare { .. } => "compare",
            Command::Stops { .. } => "stops",
            Command::Diamond { .. } => "diamond",
            Command::Yashima(y) => match y {
                YashimaCommand::Value { .. } => "yashima value",
                YashimaCommand::Classify { .. } => "yashima classify",
                YashimaCommand::Stats { .. } => "yashima stats",
                YashimaCommand::Verify { .. } => "yashima verify",
            },
        }
    }

    pub fn input(&self) -> String {
        match self {
            Command::Value { input } => input.clone(),
            Command::Canonical { expr } | Command::Stops { expr, .. } | Command::Diamond { expr, .. } => expr.clone(),
            Command::Compare { left, right } => format!("{left} {right}"),
            Command::Yashima(y) => match y {
                YashimaCommand::Value { file } | YashimaCommand::Classify { file } | YashimaCommand::Stats { file } => {
                    file.clone()
                }
                YashimaCommand::Verify {
                    max_vertices,
                    max_edges,
                    variant,
                    ..
                } => format!("{max_vertices} {max_edges} {variant:?}").to_lowercase(),
            },
        }
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

fn load_graph(path: &str) -> Result<YashimaState, CliError> {
    parse_graph(&read_file(path)?)
}

fn game(store: &mut GameStore, text: &str) -> Result<GameId, CliError> {
    Ok(elaborate(store, &parse_game(text)?))
}

fn color_name(c: ColorClass) -> &'static str {
    match c {
        ColorClass::DifferentColor => "different-color",
        ColorClass::SameColor => "same-color",
        ColorClass::NotBipartite => "not-bipartite",
    }
}

pub fn run(command: &Command, store: &mut GameStore) -> Result<Outcome, CliError> {
    let name = command.name();
    let input = command.input();
    match command {
        Command::Value { input: text } => {
            if Path::new(text).is_file() {
                return yashima_value(name, text, store);
            }
            let g = game(store, text)?;
            let v = print_value(store, g);
            let mut out = Outcome::new(name, input).text(v.clone());
            out.result = json!(v);
            Ok(out)
        }
        Command::Canonical { expr } => {
            let g = game(store, expr)?;
            let v = canonical_braces(store, g).to_string();
            let mut out = Outcome::new(name, input).text(v.clone());
            out.result = json!(v);
            Ok(out)
        }
        Command::Compare { left, right } => {
            let g = game(store, left)?;
            let h = game(store, right)?;
            let rel = store.compare(g, h).symbol();
            let mut out = Outcome::new(name, input).text(rel);
            out.result = json!(rel);
            Ok(out)
        }
        Command::Stops { system, expr } => {
            let g = game(store, expr)?;
            let (ls, rs) = store.stops(g, (*system).into())?;
            let mut out = Outcome::new(name, input).text(format!("{ls} {rs}"));
            out.result = json!({ "left": ls.to_string(), "right": rs.to_string() });
            Ok(out)
        }
        Command::Diamond { property, expr } => {
            let g = game(store, expr)?;
            let report = store.has_property(g, *property)?;
            Ok(diamond_outcome(name, input, store, *property, &report))
        }
        Command::Yashima(y) => match y {
            YashimaCommand::Value { file } => yashima_value(name, file, store),
            YashimaCommand::Classify { file } => {
                let s = load_graph(file)?;
                let c = color_name(s.classify());
                let mut out = Outcome::new(name, input).text(c);
                out.result = json!(c);
                Ok(out)
            }
            YashimaCommand::Stats { file } => {
                let s = load_graph(file)?;
                let stats = solve_stats(store, &s);
                let v = print_value(store, stats.canonical);
                let mut out = Outcome::new(name, input)
                    .text(format!("value {v}"))
                    .text(format!("expanded_nodes {}", stats.expanded_nodes))
                    .text(format!("memo_entries {}", stats.memo_entries));
                out.result = json!(v);
                out.counts.insert("expanded_nodes".into(), json!(stats.expanded_nodes));
                out.counts.insert("memo_entries".into(), json!(stats.memo_entries));
                Ok(out)
            }
            YashimaCommand::Verify {
                max_vertices,
                max_edges,
                variant,
                budget,
            } => {
                let mut bounds = EnumerationBounds::new(*max_vertices, *max_edges, (*variant).into());
                if let Some(b) = budget {
                    bounds.budget = *b;
                }
                let r = verify_corollary5(store, bounds)?;
                let mut out = Outcome::new(name, input)
                    .text(format!("{} counterexamples", r.counterexamples))
                    .text(format!(
                        "graphs {} states {} different-color {} same-color {} commuting-pairs {}",
                        r.graphs, r.states, r.different_color, r.same_color, r.commuting_pairs
                    ));
                out.result = json!(format!("{} counterexamples", r.counterexamples));
                for (k, v) in [
                    ("graphs", r.graphs),
                    ("states", r.states),
                    ("different_color", r.different_color),
                    ("same_color", r.same_color),
                    ("commuting_pairs", r.commuting_pairs),
                    ("counterexamples", r.counterexamples),
                    ("not_bipartite", r.violations.not_bipartite),
                    ("not_integer", r.violations.not_integer),
                    ("not_commuting", r.violations.not_commuting),
                    ("not_integer_pair", r.violations.not_integer_pair),
                ] {
                    out.counts.insert(k.into(), json!(v));
                }
                if let Some(c) = &r.first_counterexample {
                    let graph = print_graph(&c.state);
                    out.witnesses.push(json!({
                        "violation": format!("{:?}", c.violation),
                        "graph": graph,
                    }));
                    out = out.text(format!("first counterexample ({:?}):", c.violation));
                    out = out.text(graph.trim_end().to_string());
                    out.exit = EXIT_FAILED;
                }
                if r.counterexamples > 0 {
                    out.exit = EXIT_FAILED;
                }
                Ok(out)
            }
        },
    }
}

fn yashima_value(name: &'static str, file: &str, store: &mut GameStore) -> Result<Outcome, CliError> {
    let s = load_graph(file)?;
    let g = YashimaSolver::new().to_game(store, &s);
    let v = print_value(store, g);
    let mut out = Outcome::new(name, file).text(v.clone());
    out.result = json!(v);
    Ok(out)
}

fn diamond_outcome(
    name: &'static str,
    input: String,
    store: &mut GameStore,
    property: Property,
    report: &PropertyReport,
) -> Outcome {
    let verdict = if !report.holds {
        "fails"
    } else if report.member {
        "holds (member)"
    } else {
        "holds"
    };
    let mut out = Outcome::new(name, input).text(verdict);
    out.result = json!({
        "property": property.code(),
        "holds": report.holds,
        "member": report.member,
        "search_exhausted": report.search_exhausted,
    });
    if let Some(w) = report.witness {
        let mut show = |g: Option<GameId>| g.map(|g| print_value(store, g));
        let gl = show(Some(w.guide_left));
        let gr = show(Some(w.guide_right));
        let lr = show(w.left_reply);
        let rl = show(w.right_reply);
        let x = w.number.map(|x| x.to_string());
        out.witnesses.push(json!({
            "guide_left": gl,
            "guide_right": gr,
            "number": x,
            "left_reply": lr,
            "right_reply": rl,
        }));
        let mut line = format!("guides {} | {}", gl.unwrap_or_default(), gr.unwrap_or_default());
        if let Some(x) = x {
            line.push_str(&format!(", x = {x}"));
        }
        if let Some(a) = lr {
            line.push_str(&format!(", left reply {a}"));
        }
        if let Some(b) = rl {
            line.push_str(&format!(", right reply {b}"));
        }
        out = out.text(line);
    }
    if report.search_exhausted {
        out = out.text("number search hit its denominator bound");
    }
    if !report.holds {
        out.exit = EXIT_FAILED;
    }
    out
}
