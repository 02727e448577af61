//! Command-line front end. Reports are `key=value` lines on stdout.
//!
//! Exit codes: 0 success (or no countermodel), 1 negative finding
//! (countermodel found, audit or verification failure), 2 invalid input,
//! 3 I/O error.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polycontact::algebra::{audit_exhaustive, audit_sampled, AuditOptions, AuditReport, CellSet};
use polycontact::logic::{
    eval, find_countermodel, is_axiom_instance, parse_formula, parse_formula_file,
};
use polycontact::svg::{self, ClipBox};
use polycontact::{
    random, AdjacencySpace, ContactKind, CountermodelCertificate, CylinderPolytope,
    FiniteContactAlgebra, Formula, IntervalPolytope, ParseError, PlanePolytope, PolytopeAlgebra,
};

#[derive(Parser)]
#[command(
    name = "polycontact",
    version,
    about = "Strong contact of polytopes and countermodel synthesis"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Strong contact, contact and overlap of two polytope files.
    ScCheck {
        a: PathBuf,
        b: PathBuf,
        /// Draw both polytopes and the witness (plane only).
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        clip: Option<String>,
    },
    /// Topological contact (nonempty intersection) of two polytope files.
    CCheck { a: PathBuf, b: PathBuf },
    /// Boolean operation on polytope files; prints the result polytope.
    BoolOp {
        op: BoolOpKind,
        a: PathBuf,
        b: Option<PathBuf>,
        /// Also write the result to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Contact-axiom audit of a graph file (exhaustive) or of `interval` /
    /// `plane` polytopes (sampled).
    Audit {
        target: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check the Boolean-algebra equations.
        #[arg(long)]
        boolean: bool,
        #[arg(long, value_enum, default_value_t = Kind::Sc)]
        contact: Kind,
    },
    /// Break every cycle of a connected graph; prints the tree and the map.
    Untie {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Numeration, arrangement and polytope images of a tree.
    Project {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        dim: usize,
        /// Root cell name (default: the first cell).
        #[arg(long)]
        root: Option<String>,
    },
    /// Evaluate a formula in a finite space (`VAR=cell,cell`) or on the line
    /// (`VAR=<interval polytope>`).
    Eval {
        formula: String,
        #[arg(long)]
        space: Option<PathBuf>,
        assignments: Vec<String>,
    },
    /// Search finite connected spaces for a countermodel.
    Countermodel {
        /// Formula text, or omitted with `--file`.
        formula: Option<String>,
        /// One formula per line.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Countermodel search followed by untying, projection and merging.
    Synthesize {
        formula: String,
        #[arg(long, default_value_t = 4)]
        bound: usize,
        #[arg(long, default_value_t = 1)]
        dim: usize,
        /// Write the certificate to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Draw the geometric valuation on a number line.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Render polytope files (or a certificate) as SVG.
    Render {
        files: Vec<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Viewport `xmin,ymin,xmax,ymax` for plane polytopes.
        #[arg(long)]
        clip: Option<String>,
    },
    /// Re-run every stage check of a certificate file.
    Verify { certificate: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum BoolOpKind {
    Union,
    Meet,
    Complement,
    Equal,
    Subset,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sc,
    C,
}

impl From<Kind> for ContactKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Sc => ContactKind::Strong,
            Kind::C => ContactKind::Topological,
        }
    }
}

enum Failure {
    Input(String),
    Io(String),
}

impl Failure {
    fn parse(source: &str, e: ParseError) -> Failure {
        Failure::Input(format!("{source}: {e}"))
    }

    fn input(e: impl fmt::Display) -> Failure {
        Failure::Input(e.to_string())
    }
}

/// `Ok(true)` for a negative finding.
type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

#[derive(Clone)]
enum Poly {
    Line(IntervalPolytope),
    Plane(PlanePolytope),
    Cyl(CylinderPolytope),
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Poly::Line(p) => write!(f, "{p}"),
            Poly::Plane(p) => write!(f, "{p}"),
            Poly::Cyl(p) => write!(f, "{p}"),
        }
    }
}

fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let t = text.trim_start();
    if t.starts_with("poly") {
        PlanePolytope::parse(text).map(Poly::Plane)
    } else if t.starts_with("cyl") {
        CylinderPolytope::parse(text).map(Poly::Cyl)
    } else {
        IntervalPolytope::parse(text).map(Poly::Line)
    }
}

fn load_poly(path: &Path) -> Result<Poly, Failure> {
    let text = read(path)?;
    parse_poly(&text).map_err(|e| Failure::parse(&path.display().to_string(), e))
}

fn load_space(path: &Path) -> Result<AdjacencySpace, Failure> {
    let text = read(path)?;
    AdjacencySpace::parse(&text).map_err(|e| Failure::parse(&path.display().to_string(), e))
}

fn formula(text: &str) -> Result<Formula, Failure> {
    parse_formula(text).map_err(|e| Failure::parse("formula", e))
}

fn mismatch() -> Failure {
    Failure::Input("polytopes live in different spaces".into())
}

fn parse_clip(clip: Option<&str>, default: ClipBox) -> Result<ClipBox, Failure> {
    clip.map_or(Ok(default), |c| {
        ClipBox::parse(c).map_err(|e| Failure::parse("--clip", e))
    })
}

fn run(command: Command) -> Outcome {
    match command {
        Command::ScCheck { a, b, svg, clip } => sc_check(&a, &b, svg.as_deref(), clip.as_deref()),
        Command::CCheck { a, b } => {
            let c = match (load_poly(&a)?, load_poly(&b)?) {
                (Poly::Line(p), Poly::Line(q)) => p.contact_c(&q),
                (Poly::Plane(p), Poly::Plane(q)) => p.contact_c(&q),
                (Poly::Cyl(p), Poly::Cyl(q)) => p.contact_c(&q).map_err(Failure::input)?,
                _ => return Err(mismatch()),
            };
            println!("C={c}");
            Ok(false)
        }
        Command::BoolOp { op, a, b, out } => bool_op(op, &a, b.as_deref(), out.as_deref()),
        Command::Audit {
            target,
            samples,
            seed,
            boolean,
            contact,
        } => audit(
            &target,
            samples,
            seed,
            AuditOptions {
                boolean_laws: boolean,
            },
            contact.into(),
        ),
        Command::Untie { graph, out } => untie(&graph, out.as_deref()),
        Command::Project { graph, dim, root } => project(&graph, dim, root.as_deref()),
        Command::Eval {
            formula: f,
            space,
            assignments,
        } => eval_cmd(&f, space.as_deref(), &assignments),
        Command::Countermodel {
            formula: f,
            file,
            bound,
        } => countermodel(f.as_deref(), file.as_deref(), bound),
        Command::Synthesize {
            formula: f,
            bound,
            dim,
            out,
            svg,
        } => synthesize(&f, bound, dim, out.as_deref(), svg.as_deref()),
        Command::Render { files, svg, clip } => render(&files, svg.as_deref(), clip.as_deref()),
        Command::Verify { certificate } => {
            let text = read(&certificate)?;
            let cert = CountermodelCertificate::parse(&text)
                .map_err(|e| Failure::parse(&certificate.display().to_string(), e))?;
            let report = polycontact::verify(&cert);
            for c in &report.checks {
                match &c.failure {
                    None => println!("{}=PASS", c.name),
                    Some(w) => println!("{}=FAIL {w}", c.name),
                }
            }
            println!("result={}", if report.passed() { "PASS" } else { "FAIL" });
            Ok(!report.passed())
        }
    }
}

fn sc_check(a: &Path, b: &Path, svg_out: Option<&Path>, clip: Option<&str>) -> Outcome {
    let (pa, pb) = (load_poly(a)?, load_poly(b)?);
    let (sc, c, overlap, witness) = match (&pa, &pb) {
        (Poly::Line(p), Poly::Line(q)) => (
            p.contact_sc(q),
            p.contact_c(q),
            p.overlap(q),
            p.sc_witness(q).map(|(l, h)| format!("({l},{h})")),
        ),
        (Poly::Plane(p), Poly::Plane(q)) => (
            p.contact_sc(q),
            p.contact_c(q),
            p.overlap(q),
            p.sc_witness(q)
                .map(|(c, r)| format!("centre={c} radius={r}")),
        ),
        (Poly::Cyl(p), Poly::Cyl(q)) => {
            let sc = p.contact_sc(q).map_err(Failure::input)?;
            let w = p.sc_witness(q).map_err(Failure::input)?;
            (
                sc,
                p.contact_c(q).map_err(Failure::input)?,
                p.overlap(q).map_err(Failure::input)?,
                w.map(|w| format!("slab=({},{})", w.lo, w.hi)),
            )
        }
        _ => return Err(mismatch()),
    };
    println!("SC={sc} C={c} overlap={overlap}");
    if let Some(w) = witness {
        println!("witness={w}");
    }
    if let Some(path) = svg_out {
        let doc = match (&pa, &pb) {
            (Poly::Plane(p), Poly::Plane(q)) => {
                let disks: Vec<_> = p.sc_witness(q).into_iter().collect();
                svg::render_plane(
                    &[("A", p), ("B", q)],
                    &parse_clip(clip, ClipBox::square(6))?,
                    &disks,
                )
            }
            (Poly::Line(p), Poly::Line(q)) => {
                let (lo, hi) = svg::line_range([p, q]);
                svg::render_line(&[("A", p), ("B", q)], &lo, &hi)
            }
            (Poly::Cyl(p), Poly::Cyl(q)) => {
                let (lo, hi) = svg::line_range([p.base(), q.base()]);
                svg::render_line(&[("A", p.base()), ("B", q.base())], &lo, &hi)
            }
            _ => unreachable!("kinds checked above"),
        };
        write(path, &doc)?;
    }
    Ok(false)
}

fn bool_op(op: BoolOpKind, a: &Path, b: Option<&Path>, out: Option<&Path>) -> Outcome {
    let pa = load_poly(a)?;
    let pb = match (op, b) {
        (BoolOpKind::Complement, None) => None,
        (BoolOpKind::Complement, Some(_)) => {
            return Err(Failure::Input("complement takes one polytope".into()))
        }
        (_, None) => return Err(Failure::Input("this operation takes two polytopes".into())),
        (_, Some(b)) => Some(load_poly(b)?),
    };
    let result = match (op, &pa, &pb) {
        (BoolOpKind::Complement, Poly::Line(p), None) => Poly::Line(p.complement()),
        (BoolOpKind::Complement, Poly::Plane(p), None) => Poly::Plane(p.complement()),
        (BoolOpKind::Complement, Poly::Cyl(p), None) => Poly::Cyl(p.complement()),
        (BoolOpKind::Equal | BoolOpKind::Subset, _, Some(q)) => {
            let holds = relation(op, &pa, q)?;
            let key = if matches!(op, BoolOpKind::Equal) {
                "equal"
            } else {
                "subset"
            };
            println!("{key}={holds}");
            return Ok(false);
        }
        (_, Poly::Line(p), Some(Poly::Line(q))) => Poly::Line(match op {
            BoolOpKind::Union => p.union(q),
            _ => p.reg_meet(q),
        }),
        (_, Poly::Plane(p), Some(Poly::Plane(q))) => Poly::Plane(match op {
            BoolOpKind::Union => p.union(q),
            _ => p.reg_meet(q),
        }),
        (_, Poly::Cyl(p), Some(Poly::Cyl(q))) => Poly::Cyl(
            match op {
                BoolOpKind::Union => p.union(q),
                _ => p.reg_meet(q),
            }
            .map_err(Failure::input)?,
        ),
        _ => return Err(mismatch()),
    };
    println!("{result}");
    if let Some(path) = out {
        write(path, &format!("{result}\n"))?;
    }
    Ok(false)
}

fn relation(op: BoolOpKind, a: &Poly, b: &Poly) -> Result<bool, Failure> {
    let subset = matches!(op, BoolOpKind::Subset);
    Ok(match (a, b) {
        (Poly::Line(p), Poly::Line(q)) => {
            if subset {
                p.union(q) == *q
            } else {
                p == q
            }
        }
        (Poly::Plane(p), Poly::Plane(q)) => {
            if subset {
                p.is_subset_of(q)
            } else {
                p.equals(q)
            }
        }
        (Poly::Cyl(p), Poly::Cyl(q)) => {
            if p.dim() != q.dim() {
                return Err(mismatch());
            }
            if subset {
                p.base().union(q.base()) == *q.base()
            } else {
                p.base() == q.base()
            }
        }
        _ => return Err(mismatch()),
    })
}

fn print_audit(report: &AuditReport) -> bool {
    for r in &report.results {
        match &r.witness {
            None => println!("{}=PASS checked={}", r.name, r.checked),
            Some(w) => println!("{}=FAIL checked={} {w}", r.name, r.checked),
        }
    }
    println!("result={}", if report.passed() { "PASS" } else { "FAIL" });
    !report.passed()
}

/// Graphs are audited exhaustively in their induced algebra, where `kind`
/// plays no role.
fn audit(
    target: &str,
    samples: usize,
    seed: u64,
    opts: AuditOptions,
    kind: ContactKind,
) -> Outcome {
    let report = match target {
        "interval" => audit_sampled(
            &PolytopeAlgebra::interval(kind),
            samples,
            seed,
            random::interval_polytope,
            opts,
        ),
        "plane" => audit_sampled(
            &PolytopeAlgebra::plane(kind),
            samples,
            seed,
            |r| random::plane_polytope(r, false),
            opts,
        ),
        path => {
            let space = load_space(Path::new(path))?;
            if space.len() > 10 {
                return Err(Failure::Input(format!(
                    "exhaustive audit supports at most 10 cells, got {}",
                    space.len()
                )));
            }
            let alg = FiniteContactAlgebra::induced(&space).map_err(Failure::input)?;
            audit_exhaustive(&alg, opts)
        }
    };
    println!("target={target}");
    Ok(print_audit(&report))
}

fn untie(graph: &Path, out: Option<&Path>) -> Outcome {
    let space = load_space(graph)?;
    let u = polycontact::adjacency::untie(&space).map_err(Failure::input)?;
    println!("untied={}", u.space);
    println!("steps={}", u.steps.len());
    for (i, step) in u.steps.iter().enumerate() {
        let names: Vec<&str> = step.cycle.iter().map(|&c| u.space.name(c)).collect();
        println!(
            "step.{i}=cycle {} split {}-{} fresh {} cycles {}->{}",
            names.join(","),
            u.space.name(step.a),
            u.space.name(step.b),
            u.space.name(step.fresh),
            step.cycles_before,
            step.cycles_after
        );
    }
    for (cell, &image) in u.map.map().iter().enumerate() {
        println!("map.{}={}", u.space.name(cell), space.name(image));
    }
    if let Some(path) = out {
        write(path, &format!("{}\n", u.space))?;
    }
    Ok(false)
}

fn project(graph: &Path, dim: usize, root: Option<&str>) -> Outcome {
    let space = load_space(graph)?;
    let root = match root {
        None => 0,
        Some(name) => space
            .index_of(name)
            .ok_or_else(|| Failure::Input(format!("unknown cell `{name}`")))?,
    };
    let num = space.numeration(root).map_err(Failure::input)?;
    let arr = space.arrangement(&num).map_err(Failure::input)?;
    let images = polycontact::adjacency::project(&space, &arr, dim).map_err(Failure::input)?;
    let order: Vec<&str> = num.order().iter().map(|&c| space.name(c)).collect();
    let seq: Vec<&str> = arr.seq().iter().map(|&c| space.name(c)).collect();
    println!("root={}", space.name(root));
    println!("numeration={}", order.join(" "));
    println!("arrangement={}", seq.join(" "));
    for (cell, image) in images.iter().enumerate() {
        println!("image.{}={image}", space.name(cell));
    }
    Ok(false)
}

fn split_assignment(a: &str) -> Result<(&str, &str), Failure> {
    a.split_once('=')
        .map(|(k, v)| (k.trim(), v.trim()))
        .ok_or_else(|| Failure::Input(format!("assignment `{a}` lacks `=`")))
}

fn eval_cmd(text: &str, space: Option<&Path>, assignments: &[String]) -> Outcome {
    let phi = formula(text)?;
    let truth = match space {
        Some(path) => {
            let space = load_space(path)?;
            let alg = FiniteContactAlgebra::induced(&space).map_err(Failure::input)?;
            let mut v: BTreeMap<String, CellSet> = BTreeMap::new();
            for a in assignments {
                let (var, cells) = split_assignment(a)?;
                let mut set = CellSet::EMPTY;
                for name in cells.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let c = space
                        .index_of(name)
                        .ok_or_else(|| Failure::Input(format!("unknown cell `{name}`")))?;
                    set = set.union(CellSet::singleton(c));
                }
                v.insert(var.to_string(), set);
            }
            eval(&phi, &alg, &v).map_err(Failure::input)?
        }
        None => {
            let alg = PolytopeAlgebra::interval(ContactKind::Strong);
            let mut v: BTreeMap<String, IntervalPolytope> = BTreeMap::new();
            for a in assignments {
                let (var, poly) = split_assignment(a)?;
                let p = IntervalPolytope::parse(poly).map_err(|e| Failure::parse(var, e))?;
                v.insert(var.to_string(), p);
            }
            eval(&phi, &alg, &v).map_err(Failure::input)?
        }
    };
    println!("formula={phi}");
    println!("value={truth}");
    if let Some(scheme) = is_axiom_instance(&phi) {
        println!("axiom={scheme}");
    }
    Ok(false)
}

fn print_countermodel(prefix: &str, phi: &Formula, bound: usize) -> bool {
    println!("{prefix}formula={phi}");
    match find_countermodel(phi, bound) {
        None => {
            println!("{prefix}countermodel=none bound={bound}");
            false
        }
        Some(cm) => {
            println!("{prefix}countermodel={}", cm.space);
            let alg = FiniteContactAlgebra::induced(&cm.space).expect("searched spaces are small");
            for (var, set) in &cm.valuation {
                println!("{prefix}value.{var}={}", alg.set_name(*set));
            }
            true
        }
    }
}

fn countermodel(text: Option<&str>, file: Option<&Path>, bound: usize) -> Outcome {
    match (text, file) {
        (Some(t), None) => Ok(print_countermodel("", &formula(t)?, bound)),
        (None, Some(path)) => {
            let src = read(path)?;
            let formulas = parse_formula_file(&src)
                .map_err(|e| Failure::parse(&path.display().to_string(), e))?;
            let mut found = false;
            for (line, phi) in formulas {
                found |= print_countermodel(&format!("line.{line}."), &phi, bound);
            }
            Ok(found)
        }
        _ => Err(Failure::Input("give either a formula or --file".into())),
    }
}

fn synthesize(
    text: &str,
    bound: usize,
    dim: usize,
    out: Option<&Path>,
    svg_out: Option<&Path>,
) -> Outcome {
    let phi = formula(text)?;
    let Some(cert) = polycontact::synthesize(&phi, bound, dim).map_err(Failure::input)? else {
        println!("formula={phi}");
        println!("certificate=none bound={bound}");
        return Ok(false);
    };
    print!("{cert}");
    if let Some(path) = out {
        write(path, &cert.to_string())?;
    }
    if let Some(path) = svg_out {
        write(path, &certificate_svg(&cert))?;
    }
    Ok(true)
}

fn certificate_svg(cert: &CountermodelCertificate) -> String {
    let rows: Vec<(&str, &IntervalPolytope)> = cert
        .geometric_valuation
        .iter()
        .map(|(var, p)| (var.as_str(), p.base()))
        .collect();
    let (lo, hi) = svg::line_range(rows.iter().map(|(_, p)| *p));
    svg::render_line(&rows, &lo, &hi)
}

fn render(files: &[PathBuf], svg_out: Option<&Path>, clip: Option<&str>) -> Outcome {
    if files.is_empty() {
        return Err(Failure::Input("nothing to render".into()));
    }
    let mut texts = Vec::new();
    for f in files {
        texts.push((f.display().to_string(), read(f)?));
    }
    let doc = if texts.len() == 1 && texts[0].1.trim_start().starts_with("certificate") {
        let cert = CountermodelCertificate::parse(&texts[0].1)
            .map_err(|e| Failure::parse(&texts[0].0, e))?;
        certificate_svg(&cert)
    } else {
        let mut polys = Vec::new();
        for (name, text) in &texts {
            polys.push((
                name.clone(),
                parse_poly(text).map_err(|e| Failure::parse(name, e))?,
            ));
        }
        if polys.iter().all(|(_, p)| matches!(p, Poly::Plane(_))) {
            let layers: Vec<(&str, &PlanePolytope)> = polys
                .iter()
                .map(|(n, p)| match p {
                    Poly::Plane(p) => (n.as_str(), p),
                    _ => unreachable!(),
                })
                .collect();
            svg::render_plane(&layers, &parse_clip(clip, ClipBox::square(6))?, &[])
        } else {
            let mut rows: Vec<(&str, &IntervalPolytope)> = Vec::new();
            for (n, p) in &polys {
                match p {
                    Poly::Line(p) => rows.push((n.as_str(), p)),
                    Poly::Cyl(p) => rows.push((n.as_str(), p.base())),
                    Poly::Plane(_) => {
                        return Err(Failure::Input("cannot mix plane and line polytopes".into()))
                    }
                }
            }
            let (lo, hi) = svg::line_range(rows.iter().map(|(_, p)| *p));
            svg::render_line(&rows, &lo, &hi)
        }
    };
    match svg_out {
        Some(path) => {
            write(path, &doc)?;
            println!("svg={}", path.display());
        }
        None => print!("{doc}"),
    }
    Ok(false)
}
