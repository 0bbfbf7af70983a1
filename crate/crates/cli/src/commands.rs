use std::path::PathBuf;

use clap::{Args, ValueEnum};
use mvgoppa::export::{to_json, CodeJson, MatrixJson, WitnessJson};
use mvgoppa::notation::parse_field;
use mvgoppa::theory::{
    classify, eaqecc_from_code, eaqecc_goppa, eaqecc_tensor, family_search, find_certificate, hull_goppa_bound,
    hull_tensor, EaqeccParams, FamilyKind, SearchConfig,
};
use mvgoppa::{Field, LinearCode};

use crate::error::{CliError, CliResult};
use crate::spec::{parse_sets, write_file, CodeInput, Family, SpecArgs};

pub fn field_name(f: &Field) -> String {
    match f.e() {
        1 => format!("GF({})", f.p()),
        e => format!("GF({}^{e})", f.p()),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Writes `text` to `out`, or to stdout when no path is given.
fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Skip the minimum distance computation.
    #[arg(long)]
    pub no_distance: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn build(a: &BuildArgs) -> CliResult<()> {
    let spec = a.spec.resolve()?;
    let code = spec.code()?;
    let d = if a.no_distance { None } else { code.min_distance(spec.dmax) };
    let json = CodeJson::new(&code, d);
    emit(&a.out, &format!("{}\n", to_json(&json)))?;
    if let Some(path) = &a.out {
        let d = d.map_or("?".to_string(), |d| d.to_string());
        println!("[{}, {}, {d}] over {} written to {}", code.n(), code.k(), field_name(code.field()), path.display());
    }
    Ok(())
}

pub fn params(input: &CodeInput) -> CliResult<()> {
    let (code, cap) = input.load()?;
    println!("field  {}", field_name(code.field()));
    println!("n      {}", code.n());
    println!("k      {}", code.k());
    match code.min_distance(cap) {
        Some(d) => {
            println!("d      {}", d.value);
            println!("exact  {}", yes(d.exact));
        }
        None => println!("d      undefined (zero code)"),
    }
    Ok(())
}

pub fn classify_cmd(input: &CodeInput) -> CliResult<()> {
    let (code, _) = input.load()?;
    println!("[{}, {}] over {}", code.n(), code.k(), field_name(code.field()));
    println!("hull dimension  {}", code.hull().k());
    println!("class           {}", classify(&code));
    Ok(())
}

pub fn hull(input: &CodeInput) -> CliResult<()> {
    let (code, _) = input.load()?;
    let h = code.hull();
    println!("code            [{}, {}] over {}", code.n(), code.k(), field_name(code.field()));
    println!("hull dimension  {}", h.k());
    println!("class           {}", classify(&code));
    if input.code.is_some() {
        return Ok(());
    }
    let spec = input.spec.resolve()?;
    let Some(f) = &spec.f else { return Ok(()) };
    let g = spec.require_g()?;
    let cert = find_certificate(&spec.set, g, f)?;
    println!("certificate     {cert}");
    println!("aligned         {}", yes(cert.aligned));
    match spec.family {
        Family::Goppa => {
            let gh = hull_goppa_bound(&spec.tower, &spec.set, g, f)?;
            println!("Gamma(S, lcm)   dimension {} (contained in the hull)", gh.subcode.k());
            println!("equality        {}", yes(gh.equal));
        }
        _ if cert.aligned => {
            let t = hull_tensor(&spec.set, g, f)?;
            println!("T(S, gcd(f,g))  dimension {} (checked against Hull(T(S, g)))", t.k());
        }
        _ => println!("T(S, gcd(f,g))  not the hull: f_j and g_j differ off j*"),
    }
    Ok(())
}

fn quantum_line(label: &str, p: &EaqeccParams) {
    println!("{label:<10} {p}  MDS {}", yes(p.mds));
}

pub fn eaqecc(input: &CodeInput) -> CliResult<()> {
    let spec = match &input.code {
        None => Some(input.spec.resolve()?),
        Some(_) => None,
    };
    match spec.as_ref().and_then(|s| s.f.as_ref().map(|f| (s, f))) {
        Some((spec, f)) if spec.family == Family::Goppa => {
            let g = spec.require_g()?;
            let r = eaqecc_goppa(&spec.tower, &spec.set, g, f, spec.dmax)?;
            println!("Gamma(S, g)  dimension {}, hull dimension {}, t = {}", r.dim, r.hull_dim, r.t);
            quantum_line("code", &r.computed.0);
            println!("{:<10} {}", "bound", r.bounds.1);
            quantum_line("dual", &r.computed.1);
            println!("{:<10} {}", "bound", r.bounds.0);
        }
        Some((spec, f)) => {
            let g = spec.require_g()?;
            let r = eaqecc_tensor(&spec.set, g, f)?;
            println!("T(S, g)  j* = {}, hull dimension {}", r.j_star + 1, r.hull_dim);
            quantum_line("code", &r.pair.0);
            quantum_line("dual", &r.pair.1);
        }
        None => {
            let (code, cap) = match spec {
                Some(s) => (s.code()?, s.dmax),
                None => input.load()?,
            };
            from_code(&code, cap)?;
        }
    }
    Ok(())
}

fn from_code(code: &LinearCode, cap: Option<usize>) -> CliResult<()> {
    let degenerate = || CliError::Lib(mvgoppa::Error::DegenerateCode);
    let d = code.min_distance(cap).ok_or_else(degenerate)?;
    let dd = code.dual().min_distance(cap).ok_or_else(degenerate)?;
    let (a, b) = eaqecc_from_code(code, d, dd)?;
    println!("code [{}, {}] hull dimension {}", code.n(), code.k(), code.hull().k());
    quantum_line("code", &a);
    quantum_line("dual", &b);
    Ok(())
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum Which {
    #[default]
    Generator,
    Parity,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    #[command(flatten)]
    pub input: CodeInput,
    #[arg(long, value_enum, default_value_t)]
    pub matrix: Which,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn export(a: &ExportArgs) -> CliResult<()> {
    let (code, _) = a.input.load()?;
    let m = match a.matrix {
        Which::Generator => code.generator().clone(),
        Which::Parity => code.parity_check(),
    };
    emit(&a.out, &format!("{}\n", to_json(&MatrixJson::from_matrix(&m))))
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub field: String,
    /// `|S_1|`, the distinguished coordinate.
    #[arg(long)]
    pub n1: usize,
    /// `|S_2|`, the repeatable coordinate.
    #[arg(long)]
    pub n2: usize,
    /// lcd, so (self-orthogonal) or sd (self-dual).
    #[arg(long)]
    pub kind: FamilyKind,
    /// Maximum number of witnesses.
    #[arg(long, default_value_t = 64)]
    pub budget: usize,
    /// Only enumerate sets `S_1` containing 0 and 1.
    #[arg(long)]
    pub affine: bool,
    #[arg(long = "set", value_name = "J:LIST", hide = true)]
    pub sets: Vec<String>,
    /// JSON lines output; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn search(a: &SearchArgs) -> CliResult<()> {
    let field = parse_field(&a.field).map_err(CliError::arg("--field"))?;
    let mut cfg = SearchConfig::new(&field, a.n1, a.n2, a.kind);
    cfg.budget = a.budget;
    cfg.affine_reps = a.affine;
    let mut sets = parse_sets(&field, &a.sets)?;
    if sets.keys().any(|&j| j > 2) {
        return Err(CliError::Usage("search takes at most --S1 and --S2".into()));
    }
    cfg.s1 = sets.remove(&1);
    cfg.s2 = sets.remove(&2);
    let r = family_search(&cfg)?;
    let mut text = String::new();
    for w in &r.witnesses {
        text += &to_json(&WitnessJson::new(a.kind, w));
        text.push('\n');
    }
    emit(&a.out, &text)?;
    let footer = format!(
        "# {} {} witnesses over {} for n1 = {}, n2 = {}{}",
        r.witnesses.len(),
        a.kind,
        field_name(&field),
        a.n1,
        a.n2,
        if r.truncated { " (budget reached)" } else { "" }
    );
    eprintln!("{footer}");
    Ok(())
}
