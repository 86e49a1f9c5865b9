//! Command definitions and dispatch.

use std::fmt::Write as _;
use std::path::PathBuf;

use artin_core::coherence::{coherence_fc, coherence_general, droms_raag, CoherenceReport, FailedCondition, Via};
use artin_core::dihedral::DihedralNF;
use artin_core::finite_type::{classify, is_fc_type, is_spherical};
use artin_core::oracles::{f2_system_search, triangle_234_search, SearchOutcome};
use artin_core::parabolic::{
    elementary_ribbon, extended_retraction, intersect_rewrite, oc_sets, property_c_precondition, x_perp,
    ParabolicDescriptor,
};
use artin_core::retraction::{
    admits_retractions_fc, ordinary_failure, ordinary_map, verify_retraction, DEFAULT_SUBSET_CAP,
};
use artin_core::{Convention, Error, Label, LabeledGraph, VertexSet, Word};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::format::{label_text, parse_graph, parse_set, parse_word, ParseError};

#[derive(Debug, Parser)]
#[command(name = "artin", version, about = "Retractions, parabolic subgroups and coherence of Artin groups")]
pub struct Cli {
    /// Graph document to operate on
    #[arg(long, global = true, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// FC type, spherical components, retractions, odd-edge structure
    Classify {
        /// Also print the graph in DOT syntax
        #[arg(long)]
        dot: bool,
    },
    /// Apply the ordinary retraction onto a standard parabolic
    Retract {
        #[arg(long, value_name = "X")]
        set: String,
        #[arg(long, value_name = "W")]
        word: String,
    },
    /// Normal form in the dihedral Artin group on `a`, `b` with relation length M
    Nf {
        #[arg(long, value_name = "M")]
        m: u32,
        #[arg(long, value_name = "W")]
        word: String,
    },
    /// O- and C-sets of a pair of vertex sets
    Csets {
        #[arg(long, value_name = "X")]
        x: String,
        #[arg(long, value_name = "Y")]
        y: String,
    },
    /// Rewrite f·A_X·f⁻¹ ∩ g·A_Y·g⁻¹ through the ordinary retractions
    Intersect {
        #[arg(long, value_name = "X")]
        x: String,
        #[arg(long, value_name = "Y")]
        y: String,
        #[arg(long, value_name = "F", default_value = "1")]
        f: String,
        #[arg(long, value_name = "G", default_value = "1")]
        g: String,
    },
    /// Retraction onto the parabolic conj·A_base·conj⁻¹
    Extend {
        #[arg(long, value_name = "X")]
        base: String,
        #[arg(long, value_name = "F", default_value = "1")]
        conj: String,
        #[arg(long, value_name = "W")]
        word: String,
    },
    /// Decide coherence; exits 1 when the group is not coherent
    Coherence,
    /// Check that the ordinary map onto X (or onto every subset) is a retraction; exits 1 otherwise
    Verify {
        #[arg(long, value_name = "X")]
        set: Option<String>,
    },
    /// Search the free group on a, b for x with (a,x)_R = (x,a)_R and (b,x)_S = (x,b)_S
    SearchF2 {
        #[arg(long, value_name = "R")]
        r: usize,
        #[arg(long, value_name = "S")]
        s: usize,
        #[arg(long, value_name = "L")]
        len: usize,
    },
    /// Search <a, b | abab = baba> for x with ax = xa and bxb = xbx
    #[command(name = "search-234")]
    Search234 {
        #[arg(long, value_name = "L")]
        len: usize,
    },
    /// Elementary ribbon for a pair of vertices
    Ribbons {
        #[arg(long, value_name = "A")]
        x: String,
        #[arg(long, value_name = "B")]
        y: String,
    },
    /// Vertices outside X commuting with all of X
    Xperp {
        #[arg(long, value_name = "X")]
        set: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Retract { .. } => "retract",
            Command::Nf { .. } => "nf",
            Command::Csets { .. } => "csets",
            Command::Intersect { .. } => "intersect",
            Command::Extend { .. } => "extend",
            Command::Coherence => "coherence",
            Command::Verify { .. } => "verify",
            Command::SearchF2 { .. } => "search-f2",
            Command::Search234 { .. } => "search-234",
            Command::Ribbons { .. } => "ribbons",
            Command::Xperp { .. } => "xperp",
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    Graph(PathBuf, ParseError),
    Argument(&'static str, ParseError),
    MissingGraph(&'static str),
    Library(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Graph(path, e) => write!(f, "{}:{}:{}: {}", path.display(), e.line, e.column, e.message),
            CliError::Argument(flag, e) => write!(f, "--{flag}, column {}: {}", e.column, e.message),
            CliError::MissingGraph(cmd) => write!(f, "`{cmd}` needs --graph FILE"),
            CliError::Library(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}

/// Result of a successful command. `negative` marks a failed check.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub witnesses: Value,
    pub text: String,
    pub negative: bool,
}

impl Outcome {
    pub fn json(&self) -> String {
        let report = json!({
            "schema": 1,
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "witnesses": self.witnesses,
        });
        serde_json::to_string_pretty(&report).expect("JSON values serialize") + "\n"
    }

    pub fn exit_code(&self) -> i32 {
        self.negative as i32
    }
}

pub fn load_graph(path: &PathBuf) -> Result<LabeledGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))?;
    parse_graph(&text).map_err(|e| CliError::Graph(path.clone(), e))
}

fn label_json(l: Label) -> Value {
    match l {
        Label::Finite(n) => json!(n),
        Label::Infinity => json!("inf"),
    }
}

fn graph_json(g: &LabeledGraph) -> Value {
    let labels: Vec<Value> = g
        .edges(Convention::NoTwoEdge)
        .into_iter()
        .map(|(u, v, l)| json!([g.name(u), g.name(v), label_json(l)]))
        .collect();
    json!({ "vertices": g.names(), "labels": labels })
}

fn set_json(g: &LabeledGraph, set: VertexSet) -> Value {
    json!(g.set_names(set))
}

fn set_text(g: &LabeledGraph, set: VertexSet) -> String {
    format!("{{{}}}", g.set_names(set).join(", "))
}

fn word_text(g: &LabeledGraph, w: &Word) -> String {
    w.display(g).to_string()
}

struct Context<'a> {
    graph: Option<LabeledGraph>,
    command: &'a Command,
}

impl Context<'_> {
    fn graph(&self) -> Result<&LabeledGraph, CliError> {
        self.graph.as_ref().ok_or(CliError::MissingGraph(self.command.name()))
    }

    fn set(&self, flag: &'static str, text: &str) -> Result<VertexSet, CliError> {
        parse_set(text, self.graph()?.names()).map_err(|e| CliError::Argument(flag, e))
    }

    fn word(&self, flag: &'static str, text: &str) -> Result<Word, CliError> {
        parse_word(text, self.graph()?.names()).map_err(|e| CliError::Argument(flag, e))
    }

    fn vertex(&self, flag: &'static str, text: &str) -> Result<usize, CliError> {
        let g = self.graph()?;
        g.names()
            .iter()
            .position(|n| n == text.trim())
            .ok_or_else(|| CliError::Argument(flag, ParseError { line: 1, column: 1, message: format!("unknown vertex `{text}`") }))
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let graph = cli.graph.as_ref().map(load_graph).transpose()?;
    let ctx = Context { graph, command: &cli.command };
    let mut outcome = match &cli.command {
        Command::Classify { dot } => run_classify(&ctx, *dot)?,
        Command::Retract { set, word } => run_retract(&ctx, set, word)?,
        Command::Nf { m, word } => run_nf(*m, word)?,
        Command::Csets { x, y } => run_csets(&ctx, x, y)?,
        Command::Intersect { x, y, f, g } => run_intersect(&ctx, x, y, f, g)?,
        Command::Extend { base, conj, word } => run_extend(&ctx, base, conj, word)?,
        Command::Coherence => run_coherence(&ctx)?,
        Command::Verify { set } => run_verify(&ctx, set.as_deref())?,
        Command::SearchF2 { r, s, len } => {
            let out = f2_system_search(*r, *s, *len);
            search_outcome("search-f2", json!({ "r": r, "s": s, "len": len }), out)
        }
        Command::Search234 { len } => search_outcome("search-234", json!({ "len": len }), triangle_234_search(*len)?),
        Command::Ribbons { x, y } => run_ribbons(&ctx, x, y)?,
        Command::Xperp { set } => run_xperp(&ctx, set)?,
    };
    if let (Some(g), Value::Object(map)) = (&ctx.graph, &mut outcome.inputs) {
        map.insert("graph".into(), graph_json(g));
    }
    Ok(outcome)
}

fn outcome(command: &'static str, inputs: Value, result: Value, witnesses: Value, text: String) -> Outcome {
    Outcome { command, inputs, result, witnesses, text, negative: false }
}

fn run_classify(ctx: &Context, dot: bool) -> Result<Outcome, CliError> {
    let g = ctx.graph()?;
    let fc = is_fc_type(g);
    let spherical = is_spherical(g);
    let components: Vec<Value> = classify(g)
        .into_iter()
        .map(|(set, t)| json!({ "vertices": set_json(g, set), "type": t.to_string() }))
        .collect();
    let (admits, method, witnesses) = if fc {
        let report = admits_retractions_fc(g)?;
        let witnesses: Vec<Value> = report
            .offending_triangles
            .iter()
            .map(|t| {
                json!({
                    "vertices": t.vertices.iter().map(|&v| g.name(v)).collect::<Vec<_>>(),
                    "labels": t.labels.iter().map(|&l| label_json(l)).collect::<Vec<_>>(),
                    "reason": t.reason.to_string(),
                })
            })
            .collect();
        (Some(report.admits), "triangles", witnesses)
    } else {
        match ordinary_failure(g, DEFAULT_SUBSET_CAP) {
            Ok(None) => (Some(true), "exhaustive", vec![]),
            Ok(Some(fail)) => (
                Some(false),
                "exhaustive",
                vec![json!({ "target": set_json(g, fail.target()), "failure": fail.describe(g) })],
            ),
            Err(Error::TooLarge(_)) => (None, "none", vec![]),
            Err(e) => return Err(e.into()),
        }
    };
    let odd_odd_free = g.is_odd_odd_free();
    let chordal = g.is_chordal();

    let mut text = String::new();
    let yes = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(text, "vertices: {}", g.len());
    let _ = writeln!(text, "spherical: {}", yes(spherical));
    let _ = writeln!(text, "FC type: {}", yes(fc));
    for (set, t) in classify(g) {
        let _ = writeln!(text, "component {}: {t}", set_text(g, set));
    }
    let admits_text = admits.map_or("undecided (too many vertices)", yes);
    let _ = writeln!(text, "admits ordinary retractions: {admits_text} (by {method})");
    for w in &witnesses {
        let _ = writeln!(text, "  witness: {w}");
    }
    let _ = writeln!(text, "(odd, odd)-free: {}", yes(odd_odd_free));
    let _ = writeln!(text, "chordal: {}", yes(chordal));
    if dot {
        text.push_str(&dot_text(g));
    }
    Ok(outcome(
        "classify",
        json!({ "dot": dot }),
        json!({
            "vertices": g.len(),
            "spherical": spherical,
            "fc_type": fc,
            "components": components,
            "admits": admits,
            "admits_method": method,
            "odd_odd_free": odd_odd_free,
            "chordal": chordal,
        }),
        json!(witnesses),
        text,
    ))
}

fn dot_text(g: &LabeledGraph) -> String {
    let mut out = String::from("graph coxeter {\n");
    for name in g.names() {
        let _ = writeln!(out, "  \"{name}\";");
    }
    for (u, v, l) in g.edges(Convention::NoTwoEdge) {
        let _ = writeln!(out, "  \"{}\" -- \"{}\" [label=\"{}\"];", g.name(u), g.name(v), label_text(l));
    }
    out.push_str("}\n");
    out
}

fn run_retract(ctx: &Context, set: &str, word: &str) -> Result<Outcome, CliError> {
    let g = ctx.graph()?;
    let x = ctx.set("set", set)?;
    let w = ctx.word("word", word)?;
    let map = ordinary_map(g, x)?;
    let image = map.apply(&w)?;
    let check = verify_retraction(g, &map);
    let witnesses = match &check {
        Ok(()) => json!([]),
        Err(v) => json!([{ "violated": v.describe(g) }]),
    };
    let mut text = word_text(g, &image) + "\n";
    if let Err(v) = &check {
        let _ = writeln!(text, "warning: the ordinary map is not a homomorphism: {}", v.describe(g));
    }
    Ok(outcome(
        "retract",
        json!({ "set": set_json(g, x), "word": word_text(g, &w) }),
        json!({ "word": word_text(g, &image), "is_retraction": check.is_ok() }),
        witnesses,
        text,
    ))
}

fn run_nf(m: u32, word: &str) -> Result<Outcome, CliError> {
    let names = vec!["a".to_string(), "b".to_string()];
    let w = parse_word(word, &names).map_err(|e| CliError::Argument("word", e))?;
    let nf = DihedralNF::from_word(m, 0, 1, &w)?;
    let factors: Vec<String> = nf.factor_words().iter().map(|f| f.display_with(&names).to_string()).collect();
    let text = format!("{}\n", nf.display(&names));
    Ok(outcome(
        "nf",
        json!({ "m": m, "word": w.display_with(&names).to_string() }),
        json!({
            "power": nf.power(),
            "factors": factors,
            "canonical_length": nf.canonical_length(),
            "word": nf.to_word().display_with(&names).to_string(),
        }),
        json!([]),
        text,
    ))
}

fn run_csets(ctx: &Context, x: &str, y: &str) -> Result<Outcome, CliError> {
    let g = ctx.graph()?;
    let (xs, ys) = (ctx.set("x", x)?, ctx.set("y", y)?);
    let oc = oc_sets(g, xs, ys)?;
    let property_c = property_c_precondition(g, xs, ys)?;
    let text = format!(
        "O_XY = {}\nC_XY = {}\nO_YX = {}\nC_YX = {}\nproperty C precondition: {}\n",
        set_text(g, oc.o_xy),
        set_text(g, oc.c_xy),
        set_text(g, oc.o_yx),
        set_text(g, oc.c_yx),
        if property_c { "yes" } else { "no" },
    );
    Ok(outcome(
        "csets",
        json!({ "x": set_json(g, xs), "y": set_json(g, ys) }),
        json!({
            "o_xy": set_json(g, oc.o_xy),
            "c_xy": set_json(g, oc.c_xy),
            "o_yx": set_json(g, oc.o_yx),
            "c_yx": set_json(g, oc.c_yx),
            "property_c_precondition": property_c,
        }),
        json!([]),
        text,
    ))
}

fn descriptor_json(g: &LabeledGraph, p: &ParabolicDescriptor) -> Value {
    json!({ "conjugator": word_text(g, &p.conjugator), "base": set_json(g, p.base) })
}

fn descriptor_text(g: &LabeledGraph, p: &ParabolicDescriptor) -> String {
    format!("({})·A_{}·({})^-1", word_text(g, &p.conjugator), set_text(g, p.base), word_text(g, &p.conjugator))
}

fn run_intersect(ctx: &Context, x: &str, y: &str, f: &str, gw: &str) -> Result<Outcome, CliError> {
    let g = ctx.graph()?;
    let (xs, ys) = (ctx.set("x", x)?, ctx.set("y", y)?);
    let (fw, gw) = (ctx.word("f", f)?, ctx.word("g", gw)?);
    let rw = intersect_rewrite(g, &fw, &gw, xs, ys)?;
    let text = format!(
        "x = {}\ny = {}\nintersection of {} and {}\n",
        word_text(g, &rw.x),
        word_text(g, &rw.y),
        descriptor_text(g, &rw.left),
        descriptor_text(g, &rw.right),
    );
    Ok(outcome(
        "intersect",
        json!({ "x": set_json(g, xs), "y": set_json(g, ys), "f": word_text(g, &fw), "g": word_text(g, &gw) }),
        json!({
            "left": descriptor_json(g, &rw.left),
            "right": descriptor_json(g, &rw.right),
            "x": word_text(g, &rw.x),
            "y": word_text(g, &rw.y),
        }),
        json!([]),
        text,
    ))
}

fn run_extend(ctx: &Context, base: &str, conj: &str, word: &str) -> Result<Outcome, CliError> {
    let g = ctx.graph()?;
    let base = ctx.set("base", base)?;
    let f = ctx.word("conj", conj)?;
    let w = ctx.word("word", word)?;
    let p = ParabolicDescriptor::new(g, f, base)?;
    let image = extended_retraction(g, &p, &w)?;
    Ok(outcome(
        "extend",
        json!({ "base": set_json(g, base), "conj": word_text(g, &p.conjugator), "word": word_text(g, &w) }),
        json!({ "word": word_text(g, &image) }),
        json!([]),
        word_text(g, &image) + "\n",
    ))
}

fn failure_json(g: &LabeledGraph, failed: &FailedCondition) -> Value {
    let names = |vs: &[usize]| vs.iter().map(|&v| g.name(v).to_owned()).collect::<Vec<_>>();
    match failed {
        FailedCondition::NotChordal { cycle, restricted } => json!({
            "condition": if *restricted { "label-2 subgraph not chordal" } else { "not chordal" },
            "vertices": names(cycle),
        }),
        FailedCondition::BadCompleteSubgraph(set) => json!({
            "condition": "complete subgraph with two labels above 2",
            "vertices": set_json(g, *set),
        }),
        FailedCondition::ForbiddenSquare(square) => json!({
            "condition": "forbidden square",
            "vertices": names(square),
        }),
    }
}

fn report_json(g: &LabeledGraph, rep: &CoherenceReport) -> Value {
    json!({
        "coherent": rep.coherent,
        "failed_condition": rep.failed_condition.as_ref().map(|f| failure_json(g, f)),
    })
}

fn run_coherence(ctx: &Context) -> Result<Outcome, CliError> {
    let g = ctx.graph()?;
    let general = coherence_general(g);
    debug_assert_eq!(general.via, Via::GeneralLemma);
    let fc = match coherence_fc(g) {
        Ok(rep) => Some(rep),
        Err(Error::NotInScope(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let raag = match droms_raag(g) {
        Ok(b) => Some(b),
        Err(Error::NotRaag) => None,
        Err(e) => return Err(e.into()),
    };
    let witnesses: Vec<Value> = general.failed_condition.iter().map(|f| failure_json(g, f)).collect();

    let mut text = format!("coherent: {}\n", if general.coherent { "yes" } else { "no" });
    for w in &witnesses {
        let _ = writeln!(text, "  {}: {}", w["condition"].as_str().unwrap_or(""), w["vertices"]);
    }
    match &fc {
        Some(rep) => {
            let _ = writeln!(text, "FC criterion: {}", if rep.coherent { "coherent" } else { "not coherent" });
        }
        None => text.push_str("FC criterion: not applicable\n"),
    }
    if let Some(b) = raag {
        let _ = writeln!(text, "right-angled criterion: {}", if b { "coherent" } else { "not coherent" });
    }
    let mut out = outcome(
        "coherence",
        json!({}),
        json!({
            "coherent": general.coherent,
            "general": report_json(g, &general),
            "fc": fc.as_ref().map(|r| report_json(g, r)),
            "raag": raag,
        }),
        json!(witnesses),
        text,
    );
    out.negative = !general.coherent;
    Ok(out)
}

fn run_verify(ctx: &Context, set: Option<&str>) -> Result<Outcome, CliError> {
    let g = ctx.graph()?;
    let (inputs, ok, witnesses) = match set {
        Some(text) => {
            let x = ctx.set("set", text)?;
            let witnesses = match ordinary_map(g, x) {
                Err(Error::AmbiguousOddTarget(v)) => {
                    vec![json!({ "target": set_json(g, x), "failure": format!("{v} has two odd edges into X") })]
                }
                Err(e) => return Err(e.into()),
                Ok(map) => match verify_retraction(g, &map) {
                    Ok(()) => vec![],
                    Err(v) => vec![json!({ "target": set_json(g, x), "failure": v.describe(g) })],
                },
            };
            (json!({ "set": set_json(g, x) }), witnesses.is_empty(), witnesses)
        }
        None => match ordinary_failure(g, DEFAULT_SUBSET_CAP)? {
            None => (json!({ "set": null }), true, vec![]),
            Some(fail) => (
                json!({ "set": null }),
                false,
                vec![json!({ "target": set_json(g, fail.target()), "failure": fail.describe(g) })],
            ),
        },
    };
    let mut text = format!("retraction: {}\n", if ok { "yes" } else { "no" });
    for w in &witnesses {
        let _ = writeln!(text, "  {}", w["failure"].as_str().unwrap_or(""));
    }
    let mut out = outcome("verify", inputs, json!({ "retraction": ok }), json!(witnesses), text);
    out.negative = !ok;
    Ok(out)
}

fn search_outcome(command: &'static str, inputs: Value, out: SearchOutcome) -> Outcome {
    let names = vec!["a".to_string(), "b".to_string()];
    let found = out.found.as_ref().map(|w| w.display_with(&names).to_string());
    let text = format!(
        "{} after {} candidates (bound {})\n",
        found.as_ref().map_or("no solution".to_string(), |w| format!("solution x = {w}")),
        out.searched_count,
        out.bound,
    );
    outcome(
        command,
        inputs,
        json!({ "found": found, "searched_count": out.searched_count, "bound": out.bound }),
        json!([]),
        text,
    )
}

fn run_ribbons(ctx: &Context, x: &str, y: &str) -> Result<Outcome, CliError> {
    let g = ctx.graph()?;
    let (xv, yv) = (ctx.vertex("x", x)?, ctx.vertex("y", y)?);
    let r = elementary_ribbon(g, xv, yv)?;
    let m = g.label(xv, yv).value().expect("finite label");
    // r⁻¹·x·r is y for odd labels and x for even ones
    let target = if m % 2 == 1 { yv } else { xv };
    let text = format!(
        "r = {}\nr^-1 · {} · r = {}\n",
        word_text(g, &r),
        g.name(xv),
        g.name(target)
    );
    Ok(outcome(
        "ribbons",
        json!({ "x": g.name(xv), "y": g.name(yv) }),
        json!({ "ribbon": word_text(g, &r), "label": m, "conjugates": [g.name(xv), g.name(target)] }),
        json!([]),
        text,
    ))
}

fn run_xperp(ctx: &Context, set: &str) -> Result<Outcome, CliError> {
    let g = ctx.graph()?;
    let x = ctx.set("set", set)?;
    let perp = x_perp(g, x);
    Ok(outcome(
        "xperp",
        json!({ "set": set_json(g, x) }),
        json!({ "perp": set_json(g, perp) }),
        json!([]),
        set_text(g, perp) + "\n",
    ))
}
