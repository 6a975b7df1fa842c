use clap::{Args, Parser, Subcommand, ValueEnum};
use gmmn::center::{self, CenterData};
use gmmn::chebyshev::{constant_terms, DTable};
use gmmn::exactnum::embed::embed_digits;
use gmmn::exactnum::CycQ;
use gmmn::fourier::{self, RConvention};
use gmmn::fusion::{cyc_order, FusionRing, SlnModular};
use gmmn::graphs::{self, NGraph};
use gmmn::koornwinder::{hypocycloid_svg, KVariety};
use gmmn::nhedral::{self, AlgElt, Nhedral};
use gmmn::weights::{stab_census, Weight};
use num_complex::Complex64;
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gmmn", version, about = "Exact computations around G(M,M,N) and sl_N at roots of unity")]
struct Cli {
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print cyclotomic numbers as decimals with this many digits.
    #[arg(long, global = true, value_name = "DIGITS")]
    numeric: Option<u32>,
    /// Allow N > 6 or M > 14.
    #[arg(long, global = true)]
    force: bool,
    /// Write the result to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct RankLevel {
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    level: u32,
}

#[derive(Subcommand)]
enum Cmd {
    /// Weight combinatorics.
    Weights {
        #[command(subcommand)]
        cmd: WeightsCmd,
    },
    /// Chebyshev polynomials U_m with sum m <= max-sum.
    Chebyshev {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_sum: u32,
        #[arg(long, conflicts_with = "latex")]
        json: bool,
        #[arg(long)]
        latex: bool,
    },
    /// Fusion rules and modular data of sl_N at level e.
    Fusion {
        what: FusionWhat,
        #[command(flatten)]
        rl: RankLevel,
    },
    /// The Koornwinder variety.
    Koornwinder {
        what: KoornWhat,
        #[command(flatten)]
        rl: RankLevel,
    },
    /// The Drinfeld center of the asymptotic category.
    Center {
        what: CenterWhat,
        #[command(flatten)]
        rl: RankLevel,
        #[arg(long)]
        unitary: bool,
    },
    /// Symbols, Frobenius eigenvalues and the pre-Fourier matrix of G(M,M,N).
    Fourier {
        what: FourierWhat,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        order: u32,
        #[arg(long, default_value = "m")]
        r_convention: RConv,
    },
    /// Nhedral Hecke algebras.
    Nhedral {
        what: NhedralWhat,
        #[command(flatten)]
        rl: RankLevel,
        #[arg(long, allow_hyphen_values = true)]
        lhs: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        rhs: Option<String>,
        /// Alcove weight for `rep`, e.g. 1,1.
        #[arg(long)]
        k: Option<String>,
    },
    /// N-colored graphs.
    Graph {
        what: GraphWhat,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        level: Option<u32>,
        /// Graph file, or the name of a shipped graph (E4, 2A_c_4, 2A_c_4_half, D4_4_figure).
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum WeightsCmd {
    Census(RankLevel),
}

#[derive(Clone, Copy, ValueEnum)]
enum FusionWhat {
    Table,
    Smatrix,
    Tmatrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum KoornWhat {
    Points,
    Plot,
    Census,
}

#[derive(Clone, Copy, ValueEnum)]
enum CenterWhat {
    Simples,
    Rank,
    Smatrix,
    Tmatrix,
    Cm,
}

#[derive(Clone, Copy, ValueEnum)]
enum FourierWhat {
    Symbols,
    Frobenius,
    Matrix,
    Compare,
}

#[derive(Clone, Copy, ValueEnum)]
enum RConv {
    E,
    M,
}

#[derive(Clone, Copy, ValueEnum)]
enum NhedralWhat {
    Dim,
    Mult,
    Onedim,
    Rep,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphWhat {
    GenA,
    GenD,
    Verify,
    Spectrum,
}

enum Failure {
    Usage(String),
    Verify(String),
    Io(std::io::Error),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Res = Result<(), Failure>;

struct Ctx {
    numeric: Option<u32>,
    out: Option<PathBuf>,
    command: String,
}

struct Prov {
    rank: Option<usize>,
    level: Option<u32>,
    n: Option<u32>,
}

impl Ctx {
    fn header_lines(&self, p: &Prov) -> Vec<String> {
        let mut v = vec![format!("gmmn {}", env!("CARGO_PKG_VERSION"))];
        if let Some(r) = p.rank {
            v.push(format!("N {r}"));
        }
        if let Some(e) = p.level {
            v.push(format!("e {e}"));
        }
        v.push(format!("command: {}", self.command));
        if let Some(n) = p.n {
            v.push(format!("cyclotomic-order {n}"));
        }
        v
    }

    fn write(&self, text: String) -> Res {
        match &self.out {
            Some(path) => std::fs::write(path, text).map_err(Failure::Io),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    /// Text or CSV with `#` provenance lines.
    fn text(&self, p: &Prov, body: &str) -> Res {
        let mut s = String::new();
        for l in self.header_lines(p) {
            let _ = writeln!(s, "# {l}");
        }
        s.push_str(body);
        self.write(s)
    }

    fn json<T: Serialize>(&self, p: &Prov, data: &T) -> Res {
        #[derive(Serialize)]
        struct Wrapped<'a, T> {
            provenance: Vec<String>,
            data: &'a T,
        }
        let w = Wrapped {
            provenance: self.header_lines(p),
            data,
        };
        let mut s = serde_json::to_string_pretty(&w).map_err(|e| Failure::Usage(e.to_string()))?;
        s.push('\n');
        self.write(s)
    }

    fn svg(&self, p: &Prov, body: &str, path: Option<&PathBuf>) -> Res {
        let s = format!("<!-- {} -->\n{body}", self.header_lines(p).join(" | "));
        match path {
            Some(path) => std::fs::write(path, s).map_err(Failure::Io),
            None => self.write(s),
        }
    }

    /// A bare scalar, as in `center rank` or `nhedral dim`.
    fn scalar(&self, v: impl std::fmt::Display) -> Res {
        self.write(format!("{v}\n"))
    }

    fn cyc(&self, x: &CycQ) -> String {
        match self.numeric {
            Some(d) => {
                let (re, im) = embed_digits(x, d);
                if im.starts_with('-') {
                    format!("{re}{im}i")
                } else {
                    format!("{re}+{im}i")
                }
            }
            None => x.to_string(),
        }
    }

    fn csv_matrix(&self, labels: &[String], rows: &[Vec<CycQ>]) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "label,{}", labels.iter().map(|l| quote(l)).collect::<Vec<_>>().join(","));
        for (l, r) in labels.iter().zip(rows) {
            let cells: Vec<String> = r.iter().map(|x| quote(&self.cyc(x))).collect();
            let _ = writeln!(s, "{},{}", quote(l), cells.join(","));
        }
        s
    }
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', ' ']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn guard(force: bool, rank: usize, order: u32) -> Res {
    if rank < 2 {
        return Err(Failure::Usage(format!("--rank must be at least 2, got {rank}")));
    }
    if !force && (rank > 6 || order > 14) {
        return Err(Failure::Usage(format!(
            "N={rank}, M={order} exceeds N <= 6, M <= 14; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn prov(rank: usize, level: u32) -> Prov {
    Prov {
        rank: Some(rank),
        level: Some(level),
        n: Some(cyc_order(rank, level)),
    }
}

fn verdict(ok: bool, what: &str) -> Res {
    if ok {
        Ok(())
    } else {
        Err(Failure::Verify(format!("{what}: FAIL")))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    let mut args: Vec<String> = Vec::new();
    let mut skip = false;
    for a in std::env::args().skip(1) {
        if skip {
            skip = false;
            continue;
        }
        if a == "--threads" {
            skip = true;
            continue;
        }
        if a.starts_with("--threads=") {
            continue;
        }
        args.push(a);
    }
    let ctx = Ctx {
        numeric: cli.numeric,
        out: cli.out.clone(),
        command: format!("gmmn {}", args.join(" ")),
    };
    match run(&cli, &ctx) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, ctx: &Ctx) -> Res {
    match &cli.cmd {
        Cmd::Weights { cmd: WeightsCmd::Census(rl) } => {
            guard(cli.force, rl.rank, rl.rank as u32 + rl.level)?;
            let c = stab_census(rl.rank, rl.level);
            ctx.json(&prov(rl.rank, rl.level), &c)?;
            verdict(c.agrees(), "stabilizer census")
        }
        Cmd::Chebyshev {
            rank,
            max_sum,
            json,
            latex,
        } => {
            guard(cli.force, *rank, 0)?;
            let table = DTable::new(*rank, *max_sum);
            let p = Prov {
                rank: Some(*rank),
                level: None,
                n: None,
            };
            let lead = |m: &Weight| -> Vec<u32> { m.0.iter().map(|&x| x as u32).collect() };
            if *json {
                #[derive(Serialize)]
                struct Row {
                    m: Weight,
                    u: String,
                    constant: String,
                }
                let rows: Vec<Row> = table
                    .weights
                    .iter()
                    .map(|m| {
                        let u = table.upoly(m);
                        Row {
                            m: m.clone(),
                            u: u.to_text(Some(&lead(m))),
                            constant: u.constant_term().to_string(),
                        }
                    })
                    .collect();
                ctx.json(&p, &rows)
            } else {
                let mut s = String::new();
                for m in &table.weights {
                    let u = table.upoly(m);
                    if *latex {
                        let _ = writeln!(s, "U_{{{m}}} &= {} \\\\", u.to_latex(Some(&lead(m))));
                    } else {
                        let _ = writeln!(s, "U{m} = {}", u.to_text(Some(&lead(m))));
                    }
                }
                let report = constant_terms(&table, max_sum.saturating_sub(1));
                let _ = writeln!(s, "# constant terms consistent: {}", report.consistent);
                ctx.text(&p, &s)
            }
        }
        Cmd::Fusion { what, rl } => {
            guard(cli.force, rl.rank, rl.rank as u32 + rl.level)?;
            let p = prov(rl.rank, rl.level);
            match what {
                FusionWhat::Table => {
                    let fr = FusionRing::new(rl.rank, rl.level);
                    let all = fr.all_matrices();
                    let mut s = String::from("a,b,c,N\n");
                    let names: Vec<String> = fr.alcove.members.iter().map(|m| m.to_string()).collect();
                    for (a, ma) in all.iter().enumerate() {
                        for b in 0..names.len() {
                            for c in 0..names.len() {
                                if ma[(b, c)] != 0 {
                                    let _ = writeln!(
                                        s,
                                        "{},{},{},{}",
                                        quote(&names[a]),
                                        quote(&names[b]),
                                        quote(&names[c]),
                                        ma[(b, c)]
                                    );
                                }
                            }
                        }
                    }
                    ctx.text(&p, &s)
                }
                FusionWhat::Smatrix => {
                    let md = SlnModular::new(rl.rank, rl.level);
                    let names: Vec<String> = md.alcove.members.iter().map(|m| m.to_string()).collect();
                    ctx.text(&p, &ctx.csv_matrix(&names, &md.s))
                }
                FusionWhat::Tmatrix => {
                    let md = SlnModular::new(rl.rank, rl.level);
                    let mut s = String::from("label,T\n");
                    for (m, t) in md.alcove.members.iter().zip(&md.t) {
                        let _ = writeln!(s, "{},{}", quote(&m.to_string()), quote(&ctx.cyc(t)));
                    }
                    ctx.text(&p, &s)
                }
            }
        }
        Cmd::Koornwinder { what, rl } => {
            guard(cli.force, rl.rank, rl.rank as u32 + rl.level)?;
            let p = prov(rl.rank, rl.level);
            let var = KVariety::new(rl.rank, rl.level)?;
            match what {
                KoornWhat::Points => {
                    let csv = var.to_csv();
                    // the CSV already starts with its cyclotomic-order line
                    let body: String = csv.lines().skip(1).map(|l| format!("{l}\n")).collect();
                    ctx.text(&p, &body)
                }
                KoornWhat::Plot => {
                    let over: Vec<(Complex64, usize)> = var.first_coordinate_clusters();
                    ctx.svg(&p, &hypocycloid_svg(rl.rank, Some(&over)), None)
                }
                KoornWhat::Census => {
                    #[derive(Serialize)]
                    struct KCensus {
                        points: usize,
                        stabilizers: std::collections::BTreeMap<u64, u64>,
                        formula: std::collections::BTreeMap<u64, u64>,
                        vanishing: bool,
                    }
                    let c = stab_census(rl.rank, rl.level);
                    let k = KCensus {
                        points: var.points.len(),
                        stabilizers: var.stab_census(),
                        formula: c.formula.clone(),
                        vanishing: var.check_vanishing().is_ok(),
                    };
                    let ok = k.vanishing && k.stabilizers == k.formula;
                    ctx.json(&p, &k)?;
                    verdict(ok, "Koornwinder census")
                }
            }
        }
        Cmd::Center { what, rl, unitary } => {
            let order = rl.rank as u32 + rl.level;
            guard(cli.force, rl.rank, order)?;
            let p = prov(rl.rank, rl.level);
            match what {
                CenterWhat::Rank => {
                    let r = center::center_rank(rl.rank, order);
                    ctx.scalar(r.formula)?;
                    verdict(r.agrees(), "center rank formula vs enumeration")
                }
                CenterWhat::Cm => {
                    let cm = center::cm_numerology(rl.rank, order);
                    ctx.json(&p, &cm)?;
                    verdict(cm.consistent(), "numerology")
                }
                CenterWhat::Simples => {
                    let mut s = String::from("index,m,k,split,stab\n");
                    for (i, x) in center::center_simples(rl.rank, rl.level).iter().enumerate() {
                        let _ = writeln!(s, "{i},\"{}\",\"{}\",{},{}", x.m, x.k, x.split, x.stab);
                    }
                    ctx.text(&p, &s)
                }
                CenterWhat::Smatrix | CenterWhat::Tmatrix => {
                    let md = SlnModular::new(rl.rank, rl.level);
                    let data = match center::center_modular_from(&md) {
                        Ok(d) => d,
                        Err(e) => {
                            eprintln!("warning: {e}");
                            let center::CenterError::Unsupported { partial, .. } = e;
                            *partial
                        }
                    };
                    let data: CenterData = if *unitary { data.to_unitary(&md) } else { data };
                    let labels: Vec<String> = data
                        .simples
                        .iter()
                        .map(|x| {
                            if x.is_split() {
                                format!("{}|{}#{}", x.m, x.k, x.split)
                            } else {
                                format!("{}|{}", x.m, x.k)
                            }
                        })
                        .collect();
                    let body = if matches!(what, CenterWhat::Smatrix) {
                        ctx.csv_matrix(&labels, &data.s)
                    } else {
                        let mut s = String::from("label,T\n");
                        for (l, t) in labels.iter().zip(&data.t) {
                            let _ = writeln!(s, "{},{}", quote(l), quote(&ctx.cyc(t)));
                        }
                        s
                    };
                    ctx.text(&p, &body)?;
                    verdict(data.missing.is_empty(), "complete modular data")
                }
            }
        }
        Cmd::Fourier {
            what,
            rank,
            order,
            r_convention,
        } => {
            guard(cli.force, *rank as usize, *order)?;
            let conv = match r_convention {
                RConv::E => RConvention::Level,
                RConv::M => RConvention::Order,
            };
            let level = order.saturating_sub(*rank);
            let p = Prov {
                rank: Some(*rank as usize),
                level: Some(level),
                n: Some(2 * rank * order),
            };
            match what {
                FourierWhat::Symbols => {
                    let set = fourier::enum_symbols(*rank, *order)?;
                    let mut s = String::from("symbol,orbit,stabilizer,r\n");
                    for (oi, orbit) in set.orbits.iter().enumerate() {
                        for &i in orbit {
                            let f = &set.symbols[i];
                            let r = f.r(conv).map(|r| r.to_string()).unwrap_or_else(|_| "-".into());
                            let _ = writeln!(s, "\"{f}\",{oi},{},{r}", f.stabilizer());
                        }
                    }
                    ctx.text(&p, &s)
                }
                FourierWhat::Frobenius => {
                    let set = fourier::enum_symbols(*rank, *order)?;
                    let mut s = String::from("symbol,alpha,frobenius\n");
                    for f in set.reps() {
                        let fr = fourier::frobenius(f)?;
                        let _ = writeln!(s, "\"{f}\",{},{}", f.alpha(), quote(&ctx.cyc(&fr)));
                    }
                    ctx.text(&p, &s)
                }
                FourierWhat::Matrix => {
                    let pf = fourier::pre_fourier(*rank, *order)?;
                    let labels: Vec<String> =
                        pf.symbols.reps().iter().map(|f| f.to_string()).collect();
                    ctx.text(&p, &ctx.csv_matrix(&labels, &pf.matrix))
                }
                FourierWhat::Compare => {
                    let r = fourier::compare(*rank, *order, conv)?;
                    ctx.json(&p, &r)?;
                    verdict(r.passes(), "comparison")
                }
            }
        }
        Cmd::Nhedral { what, rl, lhs, rhs, k } => {
            guard(cli.force, rl.rank, rl.rank as u32 + rl.level)?;
            let p = prov(rl.rank, rl.level);
            match what {
                NhedralWhat::Dim => {
                    let d = nhedral::dim_check(rl.rank, rl.level);
                    ctx.scalar(d)?;
                    verdict(d as u64 == nhedral::dim_formula(rl.rank, rl.level), "dimension formula")
                }
                NhedralWhat::Mult => {
                    let (Some(l), Some(r)) = (lhs, rhs) else {
                        return Err(Failure::Usage("`nhedral mult` needs --lhs and --rhs".into()));
                    };
                    let x = AlgElt::parse(rl.rank, Some(rl.level), l)?;
                    let y = AlgElt::parse(rl.rank, Some(rl.level), r)?;
                    if x.basis != nhedral::Basis::Kl || y.basis != nhedral::Basis::Kl {
                        return Err(Failure::Usage("products are taken in the KL basis (C[..])".into()));
                    }
                    let alg = Nhedral::new(rl.rank, rl.level);
                    let prod = alg.multiply(&x, &y);
                    ctx.write(format!("{prod}\n"))
                }
                NhedralWhat::Onedim => {
                    let reps = nhedral::one_dim_reps(rl.rank, rl.level);
                    let mut s = String::from("label,values\n");
                    for r in &reps {
                        let v: Vec<String> = r.values.iter().map(|x| x.to_string()).collect();
                        let _ = writeln!(s, "{},\"{}\"", quote(&r.label()), v.join(";"));
                    }
                    ctx.text(&p, &s)?;
                    verdict(
                        reps.len() == nhedral::one_dim_count_formula(rl.rank, rl.level),
                        "one-dimensional count",
                    )
                }
                NhedralWhat::Rep => {
                    let k = k
                        .as_deref()
                        .ok_or_else(|| Failure::Usage("`nhedral rep` needs --k".into()))?;
                    let k = Weight::parse(k)?;
                    let s = nhedral::sigma_rep(rl.rank, rl.level, &k)?;
                    let rel = s.rep.check_relations();
                    let ideal = s.rep.kills_ideal(&DTable::new(rl.rank, rl.level + 1));
                    let comm = s.rep.commutant_dim(nhedral::generic_v());
                    #[derive(Serialize)]
                    struct RepOut {
                        k: Weight,
                        stabilizer: usize,
                        profile: Vec<usize>,
                        commutant_dim: usize,
                        relations_ok: bool,
                        kills_ideal: bool,
                        theta: Vec<Vec<Vec<String>>>,
                    }
                    let out = RepOut {
                        k: s.k.clone(),
                        stabilizer: s.stab,
                        profile: s.profile.clone(),
                        commutant_dim: comm,
                        relations_ok: rel.is_ok(),
                        kills_ideal: ideal.is_ok(),
                        theta: (0..rl.rank).map(|i| nhedral::mat_to_strings(&s.rep.theta(i))).collect(),
                    };
                    let ok = out.relations_ok && out.kills_ideal && comm == s.stab;
                    ctx.json(&p, &out)?;
                    verdict(ok, "representation checks")
                }
            }
        }
        Cmd::Graph {
            what,
            rank,
            level,
            input,
            svg,
        } => run_graph(cli, ctx, *what, *rank, *level, input.as_deref(), svg.as_ref()),
    }
}

fn load_input(input: Option<&str>) -> Result<NGraph, Failure> {
    let name = input.ok_or_else(|| Failure::Usage("--in is required".into()))?;
    if let Some(g) = graphs::builtin(name) {
        return Ok(g);
    }
    Ok(graphs::load_graph(std::path::Path::new(name))?)
}

fn run_graph(
    cli: &Cli,
    ctx: &Ctx,
    what: GraphWhat,
    rank: Option<usize>,
    level: Option<u32>,
    input: Option<&str>,
    svg: Option<&PathBuf>,
) -> Res {
    let need = |r: Option<usize>, l: Option<u32>| -> Result<(usize, u32), Failure> {
        match (r, l) {
            (Some(r), Some(l)) => Ok((r, l)),
            _ => Err(Failure::Usage("--rank and --level are required".into())),
        }
    };
    match what {
        GraphWhat::GenA | GraphWhat::GenD => {
            let (r, l) = need(rank, level)?;
            guard(cli.force, r, r as u32 + l)?;
            let g = if matches!(what, GraphWhat::GenA) {
                graphs::gen_type_a(r, l)
            } else {
                let d = graphs::gen_type_d(r, l)?;
                if d.coincides_with_a {
                    eprintln!("note: gcd(N, e) = 1, the type D graph is the type A graph");
                }
                if d.solutions > 1 {
                    eprintln!("note: {} inequivalent solutions; printing the first", d.solutions);
                }
                d.graph
            };
            let mut text = String::new();
            let mut lines = g.to_text().lines().map(str::to_string).collect::<Vec<_>>().into_iter();
            let _ = writeln!(text, "{}", lines.next().unwrap());
            for h in ctx.header_lines(&prov(r, l)) {
                let _ = writeln!(text, "# {h}");
            }
            for rest in lines {
                let _ = writeln!(text, "{rest}");
            }
            ctx.write(text)
        }
        GraphWhat::Verify | GraphWhat::Spectrum => {
            let g = load_input(input)?;
            let l = level.or(g.level).ok_or_else(|| Failure::Usage("--level is required".into()))?;
            if let Some(r) = rank {
                if r != g.rank {
                    return Err(Failure::Usage(format!("--rank {r} does not match the graph rank {}", g.rank)));
                }
            }
            guard(cli.force, g.rank, g.rank as u32 + l)?;
            let p = prov(g.rank, l);
            let report = graphs::verify(&g, l);
            if let (Some(path), Some(sp)) = (svg, &report.spectrum) {
                let over: Vec<(Complex64, usize)> = sp
                    .first_coordinate
                    .iter()
                    .map(|(z, m)| (Complex64::new(z[0], z[1]), *m))
                    .collect();
                ctx.svg(&p, &hypocycloid_svg(g.rank, Some(&over)), Some(path))?;
            }
            if matches!(what, GraphWhat::Spectrum) {
                match &report.spectrum {
                    Some(sp) => ctx.json(&p, sp)?,
                    None => ctx.json(&p, &report)?,
                }
            } else {
                ctx.json(&p, &report)?;
            }
            let ok = report.passes()
                && report
                    .spectrum
                    .as_ref()
                    .is_some_and(|s| s.in_variety && s.exact_matches_numeric);
            verdict(ok, "graph verification")
        }
    }
}
