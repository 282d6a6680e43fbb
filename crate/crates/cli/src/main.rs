//! `lra`: verify and construct Leibniz-algebra data from JSON files.
//!
//! Exit codes: 0 when the check holds or the construction succeeds, 1 when it
//! fails mathematically, 2 on malformed input. Reports go to stdout as JSON
//! with sorted keys, diagnostics to stderr.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lra_core::cohomology::{self, CohomologyConfig, Degree0Convention};
use lra_core::deformation::{
    check_equivalence, check_formal_deformation, check_formal_deformation_to, check_formal_equivalence,
    check_linear_deformation, check_nijenhuis_element, trivialization_step, LinearDeformation,
};
use lra_core::format::{
    base_dir, load_bundle, load_deformation, read_json, to_json_string, AlgebraFile, Bundle, CochainFile, DatumFile,
    DeformationFile, LinearMapFile, Loaded, MorphismFile, NsFile,
};
use lra_core::generate::{self, Profile, TrbStrategy};
use lra_core::leibniz::{
    check_leibniz, check_nijenhuis, check_representation, deformed_bracket, regular_representation, twisted_semidirect,
};
use lra_core::ns_leibniz::{canonical_trb, check_ns_axioms, compatible_ns_from_invertible, ns_from_nijenhuis, ns_from_twisted_rb};
use lra_core::twisted_rb::{
    check_morphism, check_twisted_rb, gauge_transform, graph_is_subalgebra, induced_bracket, induced_representation,
    k_cohomology_dims, shift_by_cochain,
};
use lra_core::{Cochain, Error, LeibnizAlgebra, Matrix, Result, TwistedRbData, Vector};

use report::{Output, Report};

#[derive(Parser)]
#[command(name = "lra", version, about = "Exact checks and constructions for Leibniz algebras over the rationals")]
struct Cli {
    /// Print nothing; only the exit code reports the outcome.
    #[arg(long, global = true)]
    quiet: bool,
    /// Add elapsed_ms to reports (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    /// Highest cochain degree the cohomology commands accept.
    #[arg(long, global = true, env = "LRA_DEGREE_CAP", default_value_t = 3)]
    degree_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify an identity; prints a report.
    Check(CheckArgs),
    /// Run a construction; prints the resulting object.
    #[command(subcommand)]
    Build(Build),
    /// Dimensions of Z^n, B^n and H^n.
    Cohomology(CohomologyArgs),
    /// Deformation checks.
    #[command(subcommand)]
    Deform(Deform),
    /// Emit a seeded random instance.
    Gen(GenArgs),
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct CheckArgs {
    /// Check every `*.json` in a directory by its shape; files whose name
    /// contains "negative" are expected to fail.
    #[arg(long, value_name = "DIR")]
    all_fixtures: Option<PathBuf>,
    #[command(subcommand)]
    what: Option<Check>,
}

#[derive(Subcommand)]
enum Check {
    /// The Leibniz identity.
    Leibniz {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// The three representation axioms.
    Rep {
        #[arg(long)]
        bundle: PathBuf,
    },
    /// The Nijenhuis identity for a linear map on the algebra.
    Nijenhuis {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// ∂f = 0 for the bundle's cocycle or for `--cochain`.
    Cocycle {
        #[arg(long)]
        bundle: PathBuf,
        #[arg(long)]
        cochain: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Convention::Literal)]
        convention: Convention,
    },
    /// The twisted relative Rota-Baxter identity.
    Trb {
        #[arg(long)]
        bundle: PathBuf,
    },
    /// Whether the graph of K is a subalgebra of the twisted semidirect product.
    Graph {
        #[arg(long)]
        bundle: PathBuf,
    },
    /// Whether (phi, psi) is a morphism between two operators.
    Morphism {
        #[arg(long)]
        src: PathBuf,
        #[arg(long)]
        dst: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
    },
    /// The four NS-Leibniz axioms.
    Ns {
        #[arg(long)]
        ns: PathBuf,
    },
    /// Whether a vector is a Nijenhuis element of the operator.
    NijenhuisElement {
        #[arg(long)]
        bundle: PathBuf,
        /// JSON array of rationals.
        #[arg(long)]
        element: PathBuf,
    },
}

#[derive(Subcommand)]
enum Build {
    /// The regular representation, as a bundle.
    RegularRep {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// The twisted semidirect product g ⋉_H V.
    Semidirect {
        #[arg(long)]
        bundle: PathBuf,
    },
    /// The deformed bracket of a Nijenhuis operator.
    Deformed {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// The induced Leibniz bracket on V.
    InduceBracket {
        #[arg(long)]
        bundle: PathBuf,
    },
    /// The induced representation of V on g, as a bundle.
    InduceRep {
        #[arg(long)]
        bundle: PathBuf,
    },
    NsFromNijenhuis {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    NsFromTrb {
        #[arg(long)]
        bundle: PathBuf,
    },
    /// The identity operator from the NS-Leibniz algebra's data.
    CanonicalTrb {
        #[arg(long)]
        ns: PathBuf,
    },
    /// The NS-Leibniz algebra of an invertible operator.
    CompatibleNs {
        #[arg(long)]
        bundle: PathBuf,
    },
    /// K(Id − hK)⁻¹ twisted by H + ∂h, for a 1-cochain h.
    Shift {
        #[arg(long)]
        bundle: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
    },
    /// K(Id + BK)⁻¹ for a 1-cocycle B.
    Gauge {
        #[arg(long)]
        bundle: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
    },
    /// Removes the linear term with a Nijenhuis element x, ∂_K(x) = −K_1.
    Trivialize {
        #[arg(long)]
        deformation: PathBuf,
        #[arg(long)]
        element: PathBuf,
    },
}

#[derive(Args)]
struct CohomologyArgs {
    #[arg(long)]
    bundle: PathBuf,
    #[arg(long)]
    degree: usize,
    /// Cohomology of the operator K instead of the representation.
    #[arg(long)]
    of_k: bool,
    #[arg(long, value_enum, default_value_t = Convention::Literal)]
    convention: Convention,
}

#[derive(Subcommand)]
enum Deform {
    /// The three conditions on K + tK_1.
    CheckLinear {
        #[arg(long)]
        deformation: PathBuf,
    },
    /// The truncated formal deformation identity order by order.
    CheckFormal {
        #[arg(long)]
        deformation: PathBuf,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Whether a datum is an equivalence between two deformations.
    CheckEquivalence {
        #[arg(long)]
        deformation: PathBuf,
        #[arg(long)]
        other: PathBuf,
        #[arg(long)]
        datum: PathBuf,
        /// Check as truncated formal deformations up to this order.
        #[arg(long)]
        order: Option<usize>,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    dim_g: usize,
    #[arg(long, default_value_t = 2)]
    dim_v: usize,
    #[arg(long, default_value_t = 3)]
    max_numerator: i64,
    #[arg(long, default_value_t = 2)]
    max_denominator: i64,
    #[arg(long, value_enum, default_value_t = Strategy::Any)]
    strategy: Strategy,
    /// Degree for `cocycle`.
    #[arg(long, default_value_t = 2)]
    degree: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Algebra,
    /// The zero bracket.
    Abelian,
    Rep,
    /// Zero actions on a `dim_v`-dimensional space.
    TrivialRep,
    Cocycle,
    Trb,
    TrbNegative,
    Deformation,
    Ns,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Any,
    ZeroOperator,
    InvertibleCochain,
    Nijenhuis,
    Shifted,
}

impl From<Strategy> for TrbStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::Any => TrbStrategy::Any,
            Strategy::ZeroOperator => TrbStrategy::ZeroOperator,
            Strategy::InvertibleCochain => TrbStrategy::InvertibleCochain,
            Strategy::Nijenhuis => TrbStrategy::Nijenhuis,
            Strategy::Shifted => TrbStrategy::Shifted,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Literal,
    LeftMinusRight,
}

impl From<Convention> for Degree0Convention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Literal => Degree0Convention::Literal,
            Convention::LeftMinusRight => Degree0Convention::LeftMinusRight,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, result) = dispatch(&cli);
    let elapsed = cli.timing.then(|| start.elapsed().as_millis());
    let (code, text) = match result {
        Ok(Output::Report(mut r)) => {
            r.elapsed_ms = elapsed;
            (if r.holds == Some(false) { 1 } else { 0 }, to_json_string(&r))
        }
        Ok(Output::Object(v)) => (0, to_json_string(&v)),
        Ok(Output::Refused(mut r)) => {
            r.elapsed_ms = elapsed;
            (1, to_json_string(&r))
        }
        Err(e) if e.is_input_error() => {
            eprintln!("lra: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("lra: {e}");
            let mut r = Report::new(&name, Some(false), json!({ "error": e.to_string() }));
            r.elapsed_ms = elapsed;
            (1, to_json_string(&r))
        }
    };
    if !cli.quiet {
        println!("{text}");
    }
    ExitCode::from(code)
}

fn dispatch(cli: &Cli) -> (String, Result<Output>) {
    let config = CohomologyConfig { degree_cap: cli.degree_cap, ..CohomologyConfig::default() };
    match &cli.command {
        Command::Check(args) => match (&args.all_fixtures, &args.what) {
            (Some(dir), _) => ("check all-fixtures".into(), all_fixtures(dir)),
            (None, Some(c)) => check(c),
            (None, None) => ("check".into(), Err(Error::Parse("give a check subcommand or --all-fixtures".into()))),
        },
        Command::Build(b) => build(b),
        Command::Cohomology(a) => {
            let config = CohomologyConfig { degree0: a.convention.into(), ..config };
            ("cohomology".into(), cohomology_cmd(a, &config))
        }
        Command::Deform(d) => deform(d),
        Command::Gen(g) => ("gen".into(), gen(g)),
    }
}

fn named(name: &str, r: Result<Output>) -> (String, Result<Output>) {
    (name.to_string(), r)
}

/// An algebra file, or any bundle (its algebra is used).
fn load_algebra(path: &Path) -> Result<LeibnizAlgebra> {
    let v: Value = read_json(path)?;
    if v.get("bracket").is_some() {
        let f: AlgebraFile = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        return f.into_algebra();
    }
    let b: Bundle = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(b.load(&base_dir(path))?.algebra)
}

fn load_trb(path: &Path) -> Result<TwistedRbData> {
    load_bundle(path)?.twisted_rb()
}

fn load_map(path: &Path, n: usize) -> Result<Matrix> {
    let f: LinearMapFile = read_json(path)?;
    f.into_matrix_of(n, n, "map")
}

fn load_vector(path: &Path, n: usize) -> Result<Vector> {
    let x: Vector = read_json(path)?;
    if x.dim() != n {
        return Err(Error::Shape(format!("element must have length {n}, found {}", x.dim())));
    }
    Ok(x)
}

fn load_cochain(path: &Path, dim_in: usize, dim_out: usize) -> Result<Cochain> {
    let f: CochainFile = read_json(path)?;
    f.into_cochain(dim_in, dim_out)
}

fn load_one_cochain(path: &Path, d: &TwistedRbData) -> Result<Cochain> {
    let c = load_cochain(path, d.dim_g(), d.dim_v())?;
    if c.degree() != 1 {
        return Err(Error::Shape(format!("expected a degree-1 cochain, found degree {}", c.degree())));
    }
    Ok(c)
}

fn object<T: serde::Serialize>(t: &T) -> Result<Output> {
    Ok(Output::Object(serde_json::to_value(t).expect("formats serialize")))
}

fn check(c: &Check) -> (String, Result<Output>) {
    match c {
        Check::Leibniz { algebra } => named("check leibniz", (|| {
            let g = load_algebra(algebra)?;
            Ok(Report::check("check leibniz", &check_leibniz(&g), json!({ "dim": g.dim() })))
        })()),
        Check::Rep { bundle } => named("check rep", (|| {
            let r = load_bundle(bundle)?.representation()?;
            Ok(Report::check("check rep", &check_representation(&r), dims(r.dim_g(), r.dim_v())))
        })()),
        Check::Nijenhuis { algebra, map } => named("check nijenhuis", (|| {
            let g = load_algebra(algebra)?;
            let n = load_map(map, g.dim())?;
            Ok(Report::check("check nijenhuis", &check_nijenhuis(&g, &n)?, json!({ "dim": g.dim() })))
        })()),
        Check::Cocycle { bundle, cochain, convention } => named("check cocycle", (|| {
            let l = load_bundle(bundle)?;
            let r = l.representation()?;
            let f = match cochain {
                Some(p) => load_cochain(p, r.dim_g(), r.dim_v())?,
                None => l.cocycle.clone().ok_or_else(|| Error::Parse("bundle has no \"cocycle\"".into()))?,
            };
            let rep = cohomology::is_cocycle_with(&r, &f, (*convention).into())?;
            let mut details = dims(r.dim_g(), r.dim_v());
            details["degree"] = json!(f.degree());
            Ok(Report::check("check cocycle", &rep, details))
        })()),
        Check::Trb { bundle } => named("check trb", (|| {
            let d = load_trb(bundle)?;
            Ok(Report::check("check trb", &check_twisted_rb(&d), dims(d.dim_g(), d.dim_v())))
        })()),
        Check::Graph { bundle } => named("check graph", (|| {
            let d = load_trb(bundle)?;
            Ok(Report::check("check graph", &graph_is_subalgebra(&d)?, dims(d.dim_g(), d.dim_v())))
        })()),
        Check::Morphism { src, dst, morphism } => named("check morphism", (|| {
            let (a, b) = (load_trb(src)?, load_trb(dst)?);
            let f: MorphismFile = read_json(morphism)?;
            let m = f.into_morphism(&a, &b)?;
            Ok(Report::check("check morphism", &check_morphism(&a, &b, &m)?, dims(a.dim_g(), a.dim_v())))
        })()),
        Check::Ns { ns } => named("check ns", (|| {
            let f: NsFile = read_json(ns)?;
            let a = f.into_ns()?;
            Ok(Report::check("check ns", &check_ns_axioms(&a), json!({ "dim": a.dim() })))
        })()),
        Check::NijenhuisElement { bundle, element } => named("check nijenhuis-element", (|| {
            let d = load_trb(bundle)?;
            let x = load_vector(element, d.dim_g())?;
            let rep = check_nijenhuis_element(&d, &x)?;
            Ok(Report::check("check nijenhuis-element", &rep, dims(d.dim_g(), d.dim_v())))
        })()),
    }
}

fn dims(dim_g: usize, dim_v: usize) -> Value {
    json!({ "dim_g": dim_g, "dim_v": dim_v })
}

fn build(b: &Build) -> (String, Result<Output>) {
    match b {
        Build::RegularRep { algebra } => named("build regular-rep", (|| {
            object(&Bundle::from_rep(&regular_representation(&load_algebra(algebra)?)))
        })()),
        Build::Semidirect { bundle } => named("build semidirect", (|| {
            let l = load_bundle(bundle)?;
            let r = l.representation()?;
            let h = l.cocycle.clone().unwrap_or_else(|| Cochain::zero(2, r.dim_g(), r.dim_v()));
            object(&AlgebraFile::from_algebra(&twisted_semidirect(&r, &h)?))
        })()),
        Build::Deformed { algebra, map } => named("build deformed", (|| {
            let g = load_algebra(algebra)?;
            let n = load_map(map, g.dim())?;
            object(&AlgebraFile::from_algebra(&deformed_bracket(&g, &n)?))
        })()),
        Build::InduceBracket { bundle } => named("build induce-bracket", (|| {
            object(&AlgebraFile::from_algebra(&induced_bracket(&load_trb(bundle)?)?))
        })()),
        Build::InduceRep { bundle } => named("build induce-rep", (|| {
            object(&Bundle::from_rep(&induced_representation(&load_trb(bundle)?)?))
        })()),
        Build::NsFromNijenhuis { algebra, map } => named("build ns-from-nijenhuis", (|| {
            let g = load_algebra(algebra)?;
            let n = load_map(map, g.dim())?;
            object(&NsFile::from_ns(&ns_from_nijenhuis(&g, &n)?))
        })()),
        Build::NsFromTrb { bundle } => named("build ns-from-trb", (|| {
            let d = load_trb(bundle)?;
            let r = check_twisted_rb(&d);
            if !r.holds {
                return Ok(Output::Refused(Report::from_check("build ns-from-trb", &r, dims(d.dim_g(), d.dim_v()))));
            }
            object(&NsFile::from_ns(&ns_from_twisted_rb(&d)))
        })()),
        Build::CanonicalTrb { ns } => named("build canonical-trb", (|| {
            let f: NsFile = read_json(ns)?;
            object(&Bundle::from_twisted_rb(&canonical_trb(&f.into_ns()?)?))
        })()),
        Build::CompatibleNs { bundle } => named("build compatible-ns", (|| {
            let d = load_trb(bundle)?;
            match compatible_ns_from_invertible(&d)? {
                Some(a) => object(&NsFile::from_ns(&a)),
                None => Ok(refused("build compatible-ns", "K is not invertible")),
            }
        })()),
        Build::Shift { bundle, cochain } => named("build shift", (|| {
            let d = load_trb(bundle)?;
            let h = load_one_cochain(cochain, &d)?;
            match shift_by_cochain(&d, &h)? {
                Some(s) => object(&Bundle::from_twisted_rb(&s)),
                None => Ok(refused("build shift", "Id − hK is not invertible")),
            }
        })()),
        Build::Gauge { bundle, cochain } => named("build gauge", (|| {
            let d = load_trb(bundle)?;
            let c = load_one_cochain(cochain, &d)?;
            match gauge_transform(&d, &c)? {
                Some(s) => object(&Bundle::from_twisted_rb(&s)),
                None => Ok(refused("build gauge", "Id + BK is not invertible")),
            }
        })()),
        Build::Trivialize { deformation, element } => named("build trivialize", (|| {
            let tfd = load_deformation(deformation)?;
            let x = load_vector(element, tfd.base.dim_g())?;
            let (out, _) = trivialization_step(&tfd, &x)?;
            object(&DeformationFile::from_formal(&out))
        })()),
    }
}

fn refused(command: &str, reason: &str) -> Output {
    Output::Refused(Report::new(command, Some(false), json!({ "reason": reason })))
}

fn cohomology_cmd(a: &CohomologyArgs, config: &CohomologyConfig) -> Result<Output> {
    let l: Loaded = load_bundle(&a.bundle)?;
    let (rep, what) = if a.of_k {
        let d = l.twisted_rb()?;
        (k_cohomology_dims(&d, a.degree, config)?, "operator")
    } else {
        (cohomology::cohomology_dims(&l.representation()?, a.degree, config)?, "representation")
    };
    let mut details = serde_json::to_value(rep).expect("reports serialize");
    details["of"] = json!(what);
    Ok(Output::Report(Report::new("cohomology", None, details)))
}

fn deform(d: &Deform) -> (String, Result<Output>) {
    match d {
        Deform::CheckLinear { deformation } => named("deform check-linear", (|| {
            let tfd = load_deformation(deformation)?;
            if tfd.terms.len() != 1 {
                return Err(Error::Shape(format!("a linear deformation has one term, found {}", tfd.terms.len())));
            }
            let ld = LinearDeformation::new(tfd.base.clone(), tfd.terms[0].clone())?;
            let r = check_linear_deformation(&ld)?;
            Ok(Report::check("deform check-linear", &r, dims(ld.base.dim_g(), ld.base.dim_v())))
        })()),
        Deform::CheckFormal { deformation, order } => named("deform check-formal", (|| {
            let tfd = load_deformation(deformation)?;
            let r = match order {
                Some(o) => check_formal_deformation_to(&tfd, *o),
                None => check_formal_deformation(&tfd),
            };
            let mut details = dims(tfd.base.dim_g(), tfd.base.dim_v());
            details["order"] = json!(order.unwrap_or(tfd.order()));
            Ok(Report::check("deform check-formal", &r, details))
        })()),
        Deform::CheckEquivalence { deformation, other, datum, order } => named("deform check-equivalence", (|| {
            let a = load_deformation(deformation)?;
            let b = load_deformation(other)?;
            let (n, m) = (a.base.dim_g(), a.base.dim_v());
            let f: DatumFile = read_json(datum)?;
            let e = f.into_datum(n, m)?;
            let linear = order.is_none() && a.terms.len() == 1 && b.terms.len() == 1 && e.phi.is_empty() && e.psi.is_empty();
            let r = if linear {
                let la = LinearDeformation::new(a.base.clone(), a.terms[0].clone())?;
                let lb = LinearDeformation::new(b.base.clone(), b.terms[0].clone())?;
                check_equivalence(&la, &lb, &e)?
            } else {
                let o = order.unwrap_or(a.order().max(b.order()));
                check_formal_equivalence(&a, &b, &e, o)?
            };
            Ok(Report::check("deform check-equivalence", &r, dims(n, m)))
        })()),
    }
}

fn gen(a: &GenArgs) -> Result<Output> {
    let profile = Profile {
        dim_g: a.dim_g,
        dim_v: a.dim_v,
        max_numerator: a.max_numerator,
        max_denominator: a.max_denominator,
    };
    let mut rng = generate::rng(a.seed);
    match a.kind {
        GenKind::Algebra => object(&AlgebraFile::from_algebra(&generate::gen_leibniz(a.seed, &profile)?)),
        GenKind::Abelian => object(&AlgebraFile::from_algebra(&LeibnizAlgebra::zero(a.dim_g))),
        GenKind::TrivialRep => {
            let g = generate::gen_leibniz(a.seed, &profile)?;
            object(&Bundle::from_rep(&lra_core::Representation::trivial(g, a.dim_v)))
        }
        GenKind::Rep | GenKind::Cocycle => {
            let g = generate::gen_leibniz_with(&mut rng, &profile, generate::AlgebraStrategy::Catalog)?;
            let r = generate::gen_representation(&mut rng, &g, profile.dim_v, &profile)?;
            let mut b = Bundle::from_rep(&r);
            if matches!(a.kind, GenKind::Cocycle) {
                let c = generate::gen_cocycle(&mut rng, &r, a.degree, &profile);
                b.cocycle = Some(lra_core::format::Source::Inline(CochainFile::from_cochain(&c)));
            }
            object(&b)
        }
        GenKind::Trb => object(&Bundle::from_twisted_rb(&generate::gen_twisted_rb(a.seed, &profile, a.strategy.into())?)),
        GenKind::TrbNegative => {
            let d = generate::gen_twisted_rb_with(&mut rng, &profile, a.strategy.into())?;
            let bad = generate::gen_negative(&mut rng, &d, &profile)?
                .ok_or_else(|| Error::Budget("every perturbation of K stayed a solution".into()))?;
            object(&Bundle::from_twisted_rb(&bad))
        }
        GenKind::Deformation => {
            let d = generate::gen_twisted_rb_with(&mut rng, &profile, a.strategy.into())?;
            object(&DeformationFile::from_linear(&generate::gen_linear_deformation(&mut rng, &d, &profile)?))
        }
        GenKind::Ns => {
            let d = generate::gen_twisted_rb(a.seed, &profile, a.strategy.into())?;
            object(&NsFile::from_ns(&ns_from_twisted_rb(&d)))
        }
    }
}

/// Checks each fixture by shape: `tri` → NS axioms, `terms` → formal
/// deformation, `k` → operator identity, `cocycle` → cocycle, `rep` →
/// representation, `bracket` or a bare `algebra` → Leibniz identity.
fn all_fixtures(dir: &Path) -> Result<Output> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut results = Vec::new();
    let mut all = true;
    for path in &files {
        let (kind, holds) = check_fixture(path)?;
        let name = path.file_name().expect("listed files have names").to_string_lossy().into_owned();
        let expected = !name.contains("negative");
        all &= holds == expected;
        results.push(json!({ "file": name, "kind": kind, "holds": holds, "expected": expected }));
    }
    Ok(Output::Report(Report::new("check all-fixtures", Some(all), json!({ "fixtures": results }))))
}

fn check_fixture(path: &Path) -> Result<(&'static str, bool)> {
    let v: Value = read_json(path)?;
    let has = |k: &str| v.get(k).is_some();
    Ok(if has("tri") {
        let f: NsFile = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        ("ns", check_ns_axioms(&f.into_ns()?).holds)
    } else if has("terms") {
        ("deformation", check_formal_deformation(&load_deformation(path)?).holds)
    } else if has("k") {
        ("trb", check_twisted_rb(&load_trb(path)?).holds)
    } else if has("cocycle") {
        let l = load_bundle(path)?;
        let f = l.cocycle.clone().expect("checked above");
        ("cocycle", cohomology::is_cocycle(&l.representation()?, &f)?.holds)
    } else if has("rep") {
        ("rep", check_representation(&load_bundle(path)?.representation()?).holds)
    } else {
        ("algebra", check_leibniz(&load_algebra(path)?).holds)
    })
}
