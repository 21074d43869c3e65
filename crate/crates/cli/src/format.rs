//! Input file formats: plain-text polytope files and JSON curve
//! configurations.
//!
//! A polytope file starts with a header line `d n` (ambient dimension,
//! vertex count) followed by `n` lines of `d` integers, one vertex per
//! line. Lines starting with `#` and blank lines are skipped. The
//! transposed layout (`d` lines of `n` integers, common in polytope
//! database exports) is accepted when the header rules the direct
//! reading out.

use std::fmt;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use perverse_core::config::{CurveComponent, CurveConfiguration, TriplePoint};
use perverse_core::linalg::IntVector;
use perverse_core::LatticePolytope;
use serde::Deserialize;

/// Failure while loading an input file.
#[derive(Debug)]
pub enum FileError {
    Io(PathBuf, std::io::Error),
    Parse { path: PathBuf, line: usize, message: String },
    Core(perverse_core::Error),
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            FileError::Parse { path, line, message } => {
                write!(f, "{}:{line}: {message}", path.display())
            }
            FileError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FileError {}

impl From<perverse_core::Error> for FileError {
    fn from(e: perverse_core::Error) -> Self {
        FileError::Core(e)
    }
}

impl FileError {
    /// Process exit code: 1 for violated identities, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            FileError::Core(perverse_core::Error::VerificationFailed { .. })
            | FileError::Core(perverse_core::Error::InternalInconsistency(_)) => 1,
            _ => 2,
        }
    }
}

struct Row {
    line: usize,
    values: Vec<BigInt>,
}

fn data_rows(path: &Path, text: &str) -> Result<Vec<Row>, FileError> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let mut values = Vec::new();
        for token in s.split_whitespace() {
            let v: BigInt = token.parse().map_err(|_| FileError::Parse {
                path: path.to_path_buf(),
                line,
                message: format!("not an integer: {token:?}"),
            })?;
            values.push(v);
        }
        rows.push(Row { line, values });
    }
    Ok(rows)
}

fn small_usize(path: &Path, line: usize, v: &BigInt, what: &str) -> Result<usize, FileError> {
    use num_traits::ToPrimitive;
    v.to_usize()
        .filter(|&n| n <= 1_000_000)
        .ok_or_else(|| FileError::Parse {
            path: path.to_path_buf(),
            line,
            message: format!("{what} out of range: {v}"),
        })
}

/// Reads a polytope file and builds the polytope.
pub fn parse_polytope(path: &Path) -> Result<LatticePolytope, FileError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| FileError::Io(path.to_path_buf(), e))?;
    parse_polytope_text(path, &text)
}

fn parse_polytope_text(path: &Path, text: &str) -> Result<LatticePolytope, FileError> {
    let rows = data_rows(path, text)?;
    let Some(header) = rows.first() else {
        return Err(FileError::Parse {
            path: path.to_path_buf(),
            line: 1,
            message: "missing header line \"d n\"".into(),
        });
    };
    if header.values.len() != 2 {
        return Err(FileError::Parse {
            path: path.to_path_buf(),
            line: header.line,
            message: "header must be exactly two integers: dimension and vertex count".into(),
        });
    }
    let d = small_usize(path, header.line, &header.values[0], "dimension")?;
    let n = small_usize(path, header.line, &header.values[1], "vertex count")?;
    if !(2..=4).contains(&d) {
        return Err(perverse_core::Error::DimensionOutOfRange { dim: d }.into());
    }
    let data = &rows[1..];
    let fits = |count: usize, width: usize| {
        data.len() == count && data.iter().all(|r| r.values.len() == width)
    };
    let vertices: Vec<IntVector> = if fits(n, d) {
        data.iter().map(|r| r.values.clone()).collect()
    } else if d != n && fits(d, n) {
        (0..n)
            .map(|j| data.iter().map(|r| r.values[j].clone()).collect())
            .collect()
    } else {
        let (line, message) = data
            .iter()
            .find(|r| r.values.len() != d && r.values.len() != n)
            .map(|r| {
                (r.line, format!("row has {} entries, expected {d}", r.values.len()))
            })
            .unwrap_or((
                header.line,
                format!("expected {n} rows of {d} integers, found {} rows", data.len()),
            ));
        return Err(FileError::Parse { path: path.to_path_buf(), line, message });
    };
    Ok(LatticePolytope::from_vertices(vertices)?)
}

/// Renders a polytope in the canonical vertex-rows layout.
pub fn polytope_to_string(p: &LatticePolytope, comment: Option<&str>) -> String {
    let mut s = String::new();
    if let Some(c) = comment {
        s.push_str("# ");
        s.push_str(c);
        s.push('\n');
    }
    s.push_str(&format!("{} {}\n", p.dim(), p.vertices().len()));
    for v in p.vertices() {
        let row: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    ambient_count: u32,
    components: Vec<ComponentEntry>,
    #[serde(default)]
    triple_points: Vec<TripleEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentEntry {
    id: u32,
    pair: (u32, u32),
    genus: u64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TripleEntry {
    components: [u32; 3],
}

/// Reads a JSON curve-configuration file and validates it.
pub fn parse_config(path: &Path) -> Result<CurveConfiguration, FileError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| FileError::Io(path.to_path_buf(), e))?;
    let file: ConfigFile = serde_json::from_str(&text).map_err(|e| FileError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        message: e.to_string(),
    })?;
    let components = file
        .components
        .into_iter()
        .map(|c| CurveComponent { id: c.id, pair: c.pair, genus: c.genus })
        .collect();
    let triple_points = file
        .triple_points
        .into_iter()
        .map(|t| TriplePoint { component_ids: t.components })
        .collect();
    Ok(CurveConfiguration::new(file.ambient_count, components, triple_points)?)
}
