use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use euler_squares::construction::{
    construct_order3, construct_order4_diagonal, construct_order4_paired, construct_order5_cyclic,
    construct_order5_diagonal, construct_order6_paired, parse_letter_schema, solve_values,
    staircase, Order3Variant,
};
use euler_squares::directrix::{
    ap_directrices, apply_rule, closure, complete_square, enumerate_directrices,
    pandiagonal_reorder, Directrix, RuleId,
};
use euler_squares::format::{
    pair_grid_to_json_value, pair_grid_to_text, parse_index_list, parse_pair_grid_any,
    parse_square_any, square_to_json_value, square_to_text,
};
use euler_squares::march::{march, QuadrupleMember};
use euler_squares::search::{
    max_order_from_env, orthogonal_mate, transversals, verify_no_order6_pair, SweepOptions,
    DEFAULT_DIRECTRIX_LIMIT, DEFAULT_REDUCED_LIMIT, REDUCED_ORDER6_COUNT,
};
use euler_squares::verify::encode_grid;
use euler_squares::{
    analyze_square, compose_numeric, magic_constant, verify, Error, LatinSquare, PairGrid, Square,
    VerificationReport,
};

#[derive(Parser, Debug)]
#[command(
    name = "euler-squares",
    version,
    about = "Magic squares, Graeco-Latin squares and directrices"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Diagonal,
    Paired,
    Cyclic,
    Staircase,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Common line sum n(1+n^2)/2
    MagicConstant { n: u64 },

    /// Build one of the worked squares of orders 3 to 6
    Construct {
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=6))]
        order: u8,
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// I..IV for order 3; I or II for the paired order-4 squares
        #[arg(long)]
        variant: Option<String>,
    },

    /// Odd-order magic square by the staircase rule
    Staircase { n: usize },

    /// Latin square of simple, double, triple or quadruple march
    March {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=4))]
        step: u8,
        #[arg(long)]
        member: Option<QuadrupleMember>,
    },

    /// Check line sums of a numeric square (or a b.e pair grid)
    Verify {
        file: PathBuf,
        #[arg(long)]
        pandiagonal: bool,
        #[arg(long)]
        constant: Option<i64>,
        /// Print the parsed square before the report
        #[arg(long)]
        echo: bool,
    },

    /// Split a numeric square into bases and exponents
    Analyze { file: PathBuf },

    /// Directrices of the cyclic square, or transversals of a given one
    Directrices {
        #[arg(long, conflicts_with = "square", required_unless_present = "square")]
        order: Option<usize>,
        #[arg(long)]
        square: Option<PathBuf>,
        #[arg(long, conflicts_with = "square")]
        ap_only: bool,
        /// Every transversal, as the row used in each column
        #[arg(long)]
        raw_transversals: bool,
    },

    /// Apply a rule I..XI or R3 to a directrix
    Transform {
        #[arg(long)]
        rule: Option<RuleId>,
        /// Every directrix reachable by repeated rules
        #[arg(long, conflicts_with = "rule", required_unless_present = "rule")]
        closure: bool,
        directrix: String,
    },

    /// Complete square from a directrix, optionally with rows reordered
    Compose {
        #[arg(long)]
        directrix: String,
        #[arg(long)]
        reorder: Option<String>,
        #[arg(long)]
        numeric: bool,
    },

    /// Search for an orthogonal mate
    Mate { file: PathBuf },

    /// Exchange the corners (r1,c1)/(r2,c2) and (r1,c2)/(r2,c1)
    Swap {
        file: PathBuf,
        r1: usize,
        c1: usize,
        r2: usize,
        c2: usize,
    },

    /// Look for a mate of every reduced Latin square of order 6
    ProveSix {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        progress_every: usize,
        /// Include the result for every square in JSON output
        #[arg(long)]
        per_square: bool,
    },

    /// Value assignments that make a letter schema magic
    Solve { file: PathBuf },
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// Numeric square, or the numeric form of a `b.e` pair grid.
fn read_numeric(path: &Path) -> Result<Square> {
    let text = read_input(path)?;
    match parse_square_any(&text) {
        Ok(sq) => Ok(sq),
        Err(numeric) => match parse_pair_grid_any(&text) {
            Ok(g) => Ok(encode_grid(&g)?),
            Err(_) => Err(numeric.into()),
        },
    }
}

fn read_latin(path: &Path) -> Result<LatinSquare> {
    let text = read_input(path)?;
    Ok(LatinSquare::new(parse_square_any(&text)?)?)
}

fn parse_directrix(text: &str) -> Result<Directrix> {
    text.parse::<Directrix>().map_err(Into::into)
}

struct Out {
    format: Format,
    buf: String,
}

impl Out {
    fn text(&mut self, s: impl AsRef<str>) {
        let s = s.as_ref();
        self.buf.push_str(s);
        if !s.ends_with('\n') {
            self.buf.push('\n');
        }
    }

    fn json(&mut self, v: Value) {
        self.buf
            .push_str(&serde_json::to_string_pretty(&v).expect("json value"));
        self.buf.push('\n');
    }

    fn square(&mut self, sq: &Square) {
        match self.format {
            Format::Text => self.text(square_to_text(sq)),
            Format::Json => self.json(square_to_json_value(sq)),
        }
    }

    fn pairs(&mut self, g: &PairGrid) {
        match self.format {
            Format::Text => self.text(pair_grid_to_text(g)),
            Format::Json => self.json(pair_grid_to_json_value(g)),
        }
    }

    fn squares(&mut self, labelled: &[(String, Square)]) {
        match self.format {
            Format::Text => {
                for (i, (label, sq)) in labelled.iter().enumerate() {
                    if i > 0 {
                        self.text("");
                    }
                    self.text(format!("# {label}"));
                    self.text(square_to_text(sq));
                }
            }
            Format::Json => self.json(Value::Array(
                labelled
                    .iter()
                    .map(|(label, sq)| {
                        let mut v = square_to_json_value(sq);
                        v["label"] = json!(label);
                        v
                    })
                    .collect(),
            )),
        }
    }

    fn lines<T: ToString>(&mut self, key: &str, order: usize, items: &[T], raw: Vec<Vec<usize>>) {
        match self.format {
            Format::Text => {
                for it in items {
                    self.text(it.to_string());
                }
            }
            Format::Json => self.json(json!({ "order": order, key: raw })),
        }
    }
}

fn report_text(r: &VerificationReport) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut s = format!("order {} target {}\n", r.order, r.target);
    s += &format!("row sums: {:?}\n", r.row_sums);
    s += &format!("column sums: {:?}\n", r.column_sums);
    s += &format!("diagonal sums: {:?}\n", r.diagonal_sums);
    if let Some(b) = &r.broken_diagonal_sums {
        s += &format!("broken diagonal sums: {b:?}\n");
    }
    s += &format!("values 1..n^2: {}\n", yn(r.values_are_1_to_n2));
    if !r.duplicates.is_empty() {
        s += &format!("duplicates: {:?}\nmissing: {:?}\n", r.duplicates, r.missing);
    }
    for d in &r.diagonal_repeats {
        s += &format!(
            "{} diagonal repeats {} ({} times)\n",
            d.diagonal, d.value, d.count
        );
    }
    s += &format!(
        "semi-magic: {}\nmagic: {}\n",
        yn(r.is_semi_magic),
        yn(r.is_magic)
    );
    if r.broken_diagonal_sums.is_some() {
        s += &format!("pandiagonal: {}\n", yn(r.is_pandiagonal));
    }
    s
}

fn construct(
    out: &mut Out,
    order: u8,
    method: Option<Method>,
    variant: Option<&str>,
) -> Result<()> {
    use Method::*;
    match (
        order,
        method.unwrap_or(if order == 6 { Paired } else { Diagonal }),
    ) {
        (3, Diagonal) => {
            let all = construct_order3();
            match variant {
                Some(v) => {
                    let want: Order3Variant = v.parse()?;
                    let (_, sq) = all
                        .into_iter()
                        .find(|(k, _)| *k == want)
                        .expect("all variants built");
                    out.square(&sq);
                }
                None => {
                    let labelled: Vec<_> =
                        all.into_iter().map(|(k, s)| (k.to_string(), s)).collect();
                    out.squares(&labelled);
                }
            }
        }
        (4, Diagonal) => out.square(&construct_order4_diagonal()),
        (4, Paired) => {
            let (a, b) = construct_order4_paired();
            match variant {
                Some(v) if v.eq_ignore_ascii_case("I") => out.square(&a),
                Some(v) if v.eq_ignore_ascii_case("II") => out.square(&b),
                Some(v) => bail!("unknown variant {v:?} for the paired order-4 squares (I or II)"),
                None => out.squares(&[("I".into(), a), ("II".into(), b)]),
            }
        }
        (5, Diagonal) => out.square(&construct_order5_diagonal()),
        (5, Cyclic) => out.square(&construct_order5_cyclic()),
        (6, Paired) => {
            let (sq, report) = construct_order6_paired();
            match out.format {
                Format::Text => {
                    out.text(square_to_text(&sq));
                    eprint!("{}", report_text(&report));
                }
                Format::Json => {
                    let mut v = square_to_json_value(&sq);
                    v["report"] = serde_json::to_value(&report)?;
                    out.json(v);
                }
            }
        }
        (n, Staircase) if n % 2 == 1 => out.square(&staircase(n as usize)?),
        (n, m) => bail!(
            "no {} construction for order {n}",
            format!("{m:?}").to_lowercase()
        ),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<String> {
    let mut out = Out {
        format: cli.format,
        buf: String::new(),
    };
    match cli.command {
        Command::MagicConstant { n } => {
            if n == 0 {
                return Err(Error::ZeroOrder.into());
            }
            let m = magic_constant(n);
            match out.format {
                Format::Text => out.text(m.to_string()),
                Format::Json => out.json(json!({ "order": n, "magic_constant": m })),
            }
        }
        Command::Construct {
            order,
            method,
            variant,
        } => construct(&mut out, order, method, variant.as_deref())?,
        Command::Staircase { n } => out.square(&staircase(n)?),
        Command::March {
            order,
            step,
            member,
        } => {
            if member.is_some() && step != 4 {
                bail!("--member applies to --step 4 only");
            }
            out.square(march(order, step as usize, member)?.as_square())
        }
        Command::Verify {
            file,
            pandiagonal,
            constant,
            echo,
        } => {
            let sq = read_numeric(&file)?;
            let report = verify(&sq, constant, pandiagonal);
            match out.format {
                Format::Text => {
                    if echo {
                        out.text(square_to_text(&sq));
                        out.text("");
                    }
                    out.text(report_text(&report));
                }
                Format::Json => {
                    let mut v = serde_json::to_value(&report)?;
                    if echo {
                        v["square"] = square_to_json_value(&sq);
                    }
                    out.json(v);
                }
            }
        }
        Command::Analyze { file } => {
            let sq = read_numeric(&file)?;
            let a = analyze_square(&sq)?;
            let c = a.conditions;
            match out.format {
                Format::Text => {
                    let yn = |b: bool| if b { "yes" } else { "no" };
                    out.text(pair_grid_to_text(&a.pairs));
                    out.text(format!(
                        "bases latin: {}\nexponents latin: {}\npairs distinct: {}\ngraeco-latin: {}",
                        yn(c.bases_latin.is_latin),
                        yn(c.exponents_latin.is_latin),
                        yn(c.pairs_distinct),
                        yn(a.graeco.is_some())
                    ));
                }
                Format::Json => out.json(json!({
                    "pairs": pair_grid_to_json_value(&a.pairs),
                    "bases_latin": c.bases_latin.is_latin,
                    "exponents_latin": c.exponents_latin.is_latin,
                    "pairs_distinct": c.pairs_distinct,
                    "graeco_latin": a.graeco.is_some(),
                })),
            }
        }
        Command::Directrices {
            order,
            square,
            ap_only,
            raw_transversals,
        } => {
            if let Some(path) = square {
                let l = read_latin(&path)?;
                let ts = transversals(&l);
                let rows: Vec<Vec<usize>> = if raw_transversals {
                    ts.iter().map(|t| t.rows.clone()).collect()
                } else {
                    ts.iter().map(|t| t.values.clone()).collect()
                };
                let shown: Vec<String> = rows.iter().map(|r| join(r)).collect();
                out.lines("transversals", l.order(), &shown, rows);
            } else {
                let n = order.expect("clap enforces --order or --square");
                let limit = max_order_from_env(DEFAULT_DIRECTRIX_LIMIT);
                if n > limit {
                    return Err(Error::OrderLimit { order: n, limit }.into());
                }
                if raw_transversals {
                    let l = march(n, 1, None)?;
                    let rows: Vec<Vec<usize>> =
                        transversals(&l).into_iter().map(|t| t.rows).collect();
                    let shown: Vec<String> = rows.iter().map(|r| join(r)).collect();
                    out.lines("transversals", n, &shown, rows);
                } else {
                    let ds = if ap_only {
                        ap_directrices(n)
                    } else {
                        enumerate_directrices(n)
                    };
                    let raw = ds.iter().map(|d| d.terms().to_vec()).collect();
                    out.lines("directrices", n, &ds, raw);
                }
            }
        }
        Command::Transform {
            rule,
            closure: want_closure,
            directrix,
        } => {
            let d = parse_directrix(&directrix)?;
            if want_closure {
                let all: Vec<Directrix> = closure(&d).into_iter().collect();
                let raw = all.iter().map(|d| d.terms().to_vec()).collect();
                out.lines("directrices", d.order(), &all, raw);
            } else {
                let rule = rule.expect("clap enforces --rule or --closure");
                let r = apply_rule(&d, rule)?;
                match out.format {
                    Format::Text => out.text(r.to_string()),
                    Format::Json => out.json(
                        json!({ "rule": rule.name(), "order": r.order(), "directrix": r.terms() }),
                    ),
                }
            }
        }
        Command::Compose {
            directrix,
            reorder,
            numeric,
        } => {
            let d = parse_directrix(&directrix)?;
            let mut g = complete_square(&d);
            if let Some(order) = reorder {
                g = pandiagonal_reorder(&g, &parse_index_list(&order)?)?;
            }
            if numeric {
                out.square(&compose_numeric(&g));
            } else {
                out.pairs(g.grid());
            }
        }
        Command::Mate { file } => {
            let l = read_latin(&file)?;
            let cert = orthogonal_mate(&l);
            match out.format {
                Format::Text => {
                    out.text(format!(
                        "{} (transversals: {}, nodes: {})",
                        cert.outcome_name(),
                        cert.transversal_count,
                        cert.nodes
                    ));
                    if let Some(g) = cert.mate() {
                        out.text(pair_grid_to_text(g.grid()));
                    }
                }
                Format::Json => out.json(cert.to_json_value()),
            }
        }
        Command::Swap {
            file,
            r1,
            c1,
            r2,
            c2,
        } => {
            let l = read_latin(&file)?;
            out.square(l.rectangle_swap(r1, c1, r2, c2)?.as_square());
        }
        Command::ProveSix {
            jobs,
            limit,
            progress_every,
            per_square,
        } => {
            let opts = SweepOptions {
                jobs,
                limit,
                progress_every,
                max_order: max_order_from_env(DEFAULT_REDUCED_LIMIT),
            };
            let stderr = io::stderr();
            let report = verify_no_order6_pair(&opts, &|k, total, mates| {
                let _ = writeln!(stderr.lock(), "checked={k}/{total} mates={mates}");
            })?;
            match out.format {
                Format::Text => {
                    out.text(report.summary());
                    out.text(format!(
                        "squares checked: {} of {}{}",
                        report.squares_checked,
                        REDUCED_ORDER6_COUNT,
                        if report.complete {
                            ""
                        } else {
                            " (partial run)"
                        }
                    ));
                    out.text(format!("mates found: {}", report.mates_found));
                    let hist: Vec<String> = report
                        .transversal_histogram
                        .iter()
                        .map(|(t, k)| format!("{t}:{k}"))
                        .collect();
                    out.text(format!(
                        "transversals per square (count:squares): {}",
                        hist.join(" ")
                    ));
                    out.text(format!("note: {}", report.sufficiency_note));
                }
                Format::Json => {
                    let mut v = serde_json::to_value(&report)?;
                    if !per_square {
                        v.as_object_mut()
                            .expect("report object")
                            .remove("per_square");
                    }
                    out.json(v);
                }
            }
        }
        Command::Solve { file } => {
            let schema = parse_letter_schema(&read_input(&file)?)?;
            let sols = solve_values(&schema);
            match out.format {
                Format::Text => {
                    if sols.is_empty() {
                        out.text("no assignment balances every line");
                    }
                    for s in &sols {
                        out.text(format!(
                            "latin: {} | greek: {}",
                            join(&s.latin_values),
                            join(&s.greek_values)
                        ));
                    }
                }
                Format::Json => out.json(json!({
                    "order": schema.order(),
                    "solutions": sols.iter().map(|s| json!({
                        "latin": s.latin_values,
                        "greek": s.greek_values,
                        "square": square_to_json_value(&schema.evaluate(s)),
                    })).collect::<Vec<_>>(),
                })),
            }
        }
    }
    Ok(out.buf)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
