//! Code descriptions assembled from flags and TOML job files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use mvgoppa::codes::{acar, acar_g, goppa_parity, grs, tensor_goppa, tensor_grs, LinearCode};
use mvgoppa::export::{from_json, CodeJson};
use mvgoppa::notation::{parse_element_list, parse_field, parse_poly};
use mvgoppa::poly::{CartesianSet, ProductPoly, UniPoly};
use mvgoppa::{Field, FieldTower};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `GRS(S_1, k, 1/g)`, one coordinate.
    Grs,
    /// `T(S, k, g)`, or `T(S, g)` without `--k`.
    #[default]
    Tensor,
    /// `ACar(S, k, g)`, or `ACar(S, g)` without `--k`.
    Acar,
    /// `Γ(S, g)` over the subfield of `--tower`.
    Goppa,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

#[derive(Args, Clone, Debug, Default)]
pub struct SpecArgs {
    /// Field as `p`, `p^e` or `p^e:c0,..,ce` (modulus coefficients, low to high).
    #[arg(long)]
    pub field: Option<String>,
    /// Degree `t` of the field over the subfield that Goppa codes live in.
    #[arg(long)]
    pub tower: Option<u32>,
    /// Point sets, written `--S1 LIST --S2 LIST ...` on the command line.
    #[arg(long = "set", value_name = "J:LIST", hide = true)]
    pub sets: Vec<String>,
    /// Weight factor `g_j`, once per coordinate in order (coefficients low to high).
    #[arg(long = "g", value_name = "COEFFS")]
    pub g: Vec<String>,
    /// Partner factor `f_j`, once per coordinate in order.
    #[arg(long = "f", value_name = "COEFFS")]
    pub f: Vec<String>,
    /// Per-coordinate dimensions `k_j`, comma separated.
    #[arg(long, value_delimiter = ',', value_name = "K1,K2,..")]
    pub k: Vec<usize>,
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Stop the distance search after this weight and report a lower bound.
    #[arg(long)]
    pub dmax: Option<usize>,
    /// TOML job file; flags given on the command line take precedence.
    #[arg(long)]
    pub job: Option<PathBuf>,
}

/// The TOML form of [`SpecArgs`]. `S`, `g` and `f` hold one string per
/// coordinate, in the same notation as the flags.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct JobFile {
    field: Option<String>,
    tower: Option<u32>,
    #[serde(rename = "S")]
    sets: Option<Vec<String>>,
    g: Option<Vec<String>>,
    f: Option<Vec<String>>,
    k: Option<Vec<usize>>,
    family: Option<Family>,
    dmax: Option<usize>,
}

pub fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn read_job(path: &Path) -> CliResult<JobFile> {
    toml::from_str(&read_file(path)?).map_err(|e| CliError::Job { path: path.to_path_buf(), message: e.to_string() })
}

/// `--S<j>` flags, keyed by `j`.
pub fn parse_sets(field: &Field, sets: &[String]) -> CliResult<BTreeMap<usize, Vec<mvgoppa::Elem>>> {
    let mut out = BTreeMap::new();
    for raw in sets {
        let (j, list) = raw.split_once(':').ok_or_else(|| CliError::Usage(format!("malformed point set '{raw}'")))?;
        let j: usize = j.parse().map_err(|_| CliError::Usage(format!("bad coordinate index in '{raw}'")))?;
        if j == 0 {
            return Err(CliError::Usage("point sets are numbered from --S1".into()));
        }
        let pts = parse_element_list(field, list).map_err(CliError::arg(format!("--S{j}")))?;
        if out.insert(j, pts).is_some() {
            return Err(CliError::Usage(format!("--S{j} given twice")));
        }
    }
    Ok(out)
}

/// Consecutive sets `S_1, ..., S_m`.
pub fn consecutive(sets: BTreeMap<usize, Vec<mvgoppa::Elem>>) -> CliResult<Vec<Vec<mvgoppa::Elem>>> {
    for (i, &j) in sets.keys().enumerate() {
        if j != i + 1 {
            return Err(CliError::Usage(format!("--S{} is missing", i + 1)));
        }
    }
    Ok(sets.into_values().collect())
}

fn parse_product(field: &Field, items: &[String], m: usize, name: &str, origin: &str) -> CliResult<Option<ProductPoly>> {
    if items.is_empty() {
        return Ok(None);
    }
    if items.len() != m {
        return Err(CliError::Usage(format!("{} {name} factors given for {m} coordinates", items.len())));
    }
    let factors = items
        .iter()
        .enumerate()
        .map(|(j, s)| parse_poly(field, s).map_err(CliError::arg(format!("{origin}{name} #{}", j + 1))))
        .collect::<CliResult<Vec<UniPoly>>>()?;
    Ok(Some(ProductPoly::new(factors)?))
}

/// A fully resolved code description.
#[derive(Clone, Debug)]
pub struct Spec {
    pub tower: FieldTower,
    pub set: CartesianSet,
    pub g: Option<ProductPoly>,
    pub f: Option<ProductPoly>,
    pub kvec: Option<Vec<usize>>,
    pub family: Family,
    pub dmax: Option<usize>,
}

impl SpecArgs {
    pub fn resolve(&self) -> CliResult<Spec> {
        let job = match &self.job {
            Some(p) => read_job(p)?,
            None => JobFile::default(),
        };
        let origin = |flag: &str| match &self.job {
            Some(p) => format!("{}: {flag}", p.display()),
            None => flag.to_string(),
        };
        let (field_text, field_origin) = match (&self.field, &job.field) {
            (Some(f), _) => (f.clone(), "--field".to_string()),
            (None, Some(f)) => (f.clone(), origin("field")),
            (None, None) => return Err(CliError::Usage("--field is required".into())),
        };
        let field = parse_field(&field_text).map_err(CliError::arg(field_origin))?;
        let tower = match self.tower.or(job.tower) {
            Some(t) => FieldTower::with_subfield(field.clone(), t).map_err(CliError::arg("--tower"))?,
            None => FieldTower::trivial(field.clone()),
        };

        let comps = if !self.sets.is_empty() {
            consecutive(parse_sets(&field, &self.sets)?)?
        } else if let Some(sets) = &job.sets {
            sets.iter()
                .enumerate()
                .map(|(i, s)| parse_element_list(&field, s).map_err(CliError::arg(origin(&format!("S[{}]", i + 1)))))
                .collect::<CliResult<_>>()?
        } else {
            return Err(CliError::Usage("no point sets given (--S1, --S2, ...)".into()));
        };
        let set = CartesianSet::new(&field, comps)?;
        let m = set.m();

        let pick = |flags: &Vec<String>, file: &Option<Vec<String>>| -> (Vec<String>, String) {
            if !flags.is_empty() {
                (flags.clone(), "--".to_string())
            } else {
                (file.clone().unwrap_or_default(), self.job.as_ref().map(|p| format!("{}: ", p.display())).unwrap_or_default())
            }
        };
        let (gs, g_origin) = pick(&self.g, &job.g);
        let (fs, f_origin) = pick(&self.f, &job.f);
        let g = parse_product(&field, &gs, m, "g", &g_origin)?;
        let f = parse_product(&field, &fs, m, "f", &f_origin)?;

        let kvec = if !self.k.is_empty() { Some(self.k.clone()) } else { job.k.clone() };
        if let Some(k) = &kvec {
            if k.len() != m {
                return Err(CliError::Usage(format!("{} dimensions given for {m} coordinates", k.len())));
            }
        }
        Ok(Spec {
            tower,
            set,
            g,
            f,
            kvec,
            family: self.family.or(job.family).unwrap_or_default(),
            dmax: self.dmax.or(job.dmax),
        })
    }
}

impl Spec {
    pub fn field(&self) -> &Field {
        self.tower.ext()
    }

    fn weight(&self) -> ProductPoly {
        self.g.clone().unwrap_or_else(|| ProductPoly::one(self.field(), self.set.m()))
    }

    pub fn require_g(&self) -> CliResult<&ProductPoly> {
        self.g.as_ref().ok_or_else(|| CliError::Usage(format!("--g is required for the {} family", self.family)))
    }

    pub fn code(&self) -> CliResult<LinearCode> {
        let s = &self.set;
        Ok(match (self.family, &self.kvec) {
            (Family::Grs, k) => {
                if s.m() != 1 {
                    return Err(CliError::Usage("the grs family takes a single point set".into()));
                }
                let k = k.as_ref().ok_or_else(|| CliError::Usage("--k is required for the grs family".into()))?;
                grs(self.field(), s.component(0), k[0], self.weight().factor(0))?
            }
            (Family::Tensor, Some(k)) => tensor_grs(s, k, &self.weight())?,
            (Family::Tensor, None) => tensor_goppa(s, self.require_g()?)?,
            (Family::Acar, Some(k)) => acar(s, k, &self.weight())?,
            (Family::Acar, None) => acar_g(s, self.require_g()?)?,
            (Family::Goppa, _) => goppa_parity(&self.tower, s, self.require_g()?)?,
        })
    }
}

/// Either a code description or a code JSON file written by `build`.
#[derive(Args, Clone, Debug, Default)]
pub struct CodeInput {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Read the code from a JSON file instead of building it.
    #[arg(long, conflicts_with_all = ["field", "job"])]
    pub code: Option<PathBuf>,
}

impl CodeInput {
    pub fn load(&self) -> CliResult<(LinearCode, Option<usize>)> {
        match &self.code {
            Some(path) => {
                let what = path.display().to_string();
                let json: CodeJson = from_json(&read_file(path)?).map_err(CliError::arg(what.clone()))?;
                Ok((json.to_code().map_err(CliError::arg(what))?, self.spec.dmax))
            }
            None => {
                let spec = self.spec.resolve()?;
                Ok((spec.code()?, spec.dmax))
            }
        }
    }
}
