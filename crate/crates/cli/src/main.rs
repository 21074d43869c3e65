//! Command-line interface: exact invariants of reflexive lattice
//! polytopes and the perverse curves of their mirror degenerations.

mod format;
mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use perverse_core::{config, faces, mirror};
use rayon::prelude::*;
use serde_json::{json, Value};

use format::FileError;

#[derive(Parser)]
#[command(
    name = "perverse",
    version,
    about = "Exact invariants of reflexive lattice polytopes and their perverse curves"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file; for `corpus`, the target directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether the polytope is reflexive.
    CheckReflexive { path: PathBuf },
    /// Print the polar dual as a polytope file.
    Dual { path: PathBuf },
    /// List the face lattice.
    Faces { path: PathBuf },
    /// Lattice-point invariants of all edges and 2-faces.
    FaceInvariants { path: PathBuf },
    /// Counting invariants of the perverse curve of a 4-polytope.
    CurveInvariants { path: PathBuf },
    /// Hodge diamond of the perverse curve of a 4-polytope.
    Hodge { path: PathBuf },
    /// Euler number of the perverse curve, by two independent routes.
    Euler { path: PathBuf },
    /// Check every mirror identity for a polytope file, or for all
    /// .poly files in a directory.
    VerifyMirror { path: PathBuf },
    /// Hodge data of a JSON curve configuration.
    ConfigHodge {
        path: PathBuf,
        /// Polytope file to compare the configuration against.
        #[arg(long)]
        against: Option<PathBuf>,
    },
    /// Write the bundled verification corpus as polytope files.
    Corpus,
}

struct Output {
    json: bool,
    out: Option<PathBuf>,
}

impl Output {
    fn emit(&self, text: String, json_value: Value) -> Result<(), FileError> {
        let payload = if self.json {
            let mut s = serde_json::to_string_pretty(&json_value).expect("serializable");
            s.push('\n');
            s
        } else {
            text
        };
        match &self.out {
            Some(path) => {
                std::fs::write(path, payload).map_err(|e| FileError::Io(path.clone(), e))
            }
            None => {
                print!("{payload}");
                Ok(())
            }
        }
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    let output = Output { json: cli.json, out: cli.out.clone() };
    match dispatch(cli.command, &output) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &Output) -> Result<i32, FileError> {
    match cmd {
        Command::CheckReflexive { path } => check_reflexive(&path, out),
        Command::Dual { path } => dual(&path, out),
        Command::Faces { path } => faces_cmd(&path, out),
        Command::FaceInvariants { path } => face_invariants_cmd(&path, out),
        Command::CurveInvariants { path } => curve_invariants_cmd(&path, out),
        Command::Hodge { path } => hodge_cmd(&path, out),
        Command::Euler { path } => euler_cmd(&path, out),
        Command::VerifyMirror { path } => verify_mirror_cmd(&path, out),
        Command::ConfigHodge { path, against } => {
            config_hodge_cmd(&path, against.as_deref(), out)
        }
        Command::Corpus => corpus_cmd(out),
    }
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn check_reflexive(path: &Path, out: &Output) -> Result<i32, FileError> {
    let p = format::parse_polytope(path)?;
    let ok = p.is_reflexive();
    let text = format!(
        "reflexive: {}\ndim={} vertices={} facets={}\n",
        if ok { "yes" } else { "no" },
        p.dim(),
        p.vertices().len(),
        p.facets().len()
    );
    let j = json!({
        "reflexive": ok,
        "dim": p.dim(),
        "vertex_count": p.vertices().len(),
        "facet_count": p.facets().len(),
    });
    out.emit(text, j)?;
    if ok {
        Ok(0)
    } else {
        eprintln!("verification failed: reflexivity");
        Ok(1)
    }
}

fn dual(path: &Path, out: &Output) -> Result<i32, FileError> {
    let p = format::parse_polytope(path)?;
    let d = p.polar_dual()?;
    let comment = format!("polar dual of {}", file_name(path));
    let text = format::polytope_to_string(&d, Some(&comment));
    let j = json!({
        "dim": d.dim(),
        "vertex_count": d.vertices().len(),
        "vertices": report::vertices_json(&d),
    });
    out.emit(text, j)?;
    Ok(0)
}

fn faces_cmd(path: &Path, out: &Output) -> Result<i32, FileError> {
    let p = format::parse_polytope(path)?;
    let lattice = p.face_lattice();
    let fv = p.f_vector();
    let fv_str: Vec<String> = fv.iter().map(|x| x.to_string()).collect();
    let mut text = format!("f_vector: {}\n", fv_str.join(" "));
    for f in &lattice {
        text.push_str(&report::face_line(f));
        text.push('\n');
    }
    let j = json!({
        "dim": p.dim(),
        "f_vector": fv,
        "faces": lattice.iter().map(report::face_json).collect::<Vec<_>>(),
    });
    out.emit(text, j)?;
    Ok(0)
}

fn face_invariants_cmd(path: &Path, out: &Output) -> Result<i32, FileError> {
    let p = format::parse_polytope(path)?;
    let mut invariants = Vec::new();
    for f in &p.face_lattice() {
        if f.dim == 1 || f.dim == 2 {
            invariants.push(faces::face_invariants(&p, f)?);
        }
    }
    let mut text = String::new();
    for inv in &invariants {
        text.push_str(&report::face_invariants_line(inv));
        text.push('\n');
    }
    let j = json!({
        "faces": invariants.iter().map(report::face_invariants_json).collect::<Vec<_>>(),
    });
    out.emit(text, j)?;
    Ok(0)
}

fn curve_invariants_cmd(path: &Path, out: &Output) -> Result<i32, FileError> {
    let p = format::parse_polytope(path)?;
    let inv = mirror::curve_invariants(&p)?;
    out.emit(
        format!("{}\n", report::invariants_line(&inv)),
        report::invariants_json(&inv),
    )?;
    Ok(0)
}

fn hodge_cmd(path: &Path, out: &Output) -> Result<i32, FileError> {
    let p = format::parse_polytope(path)?;
    let d = mirror::hodge_diamond(&p)?;
    out.emit(format!("{}\n", report::diamond_line(&d)), report::diamond_json(&d))?;
    Ok(0)
}

fn euler_cmd(path: &Path, out: &Output) -> Result<i32, FileError> {
    let p = format::parse_polytope(path)?;
    let ep = mirror::euler_perverse(&p)?;
    let eb = mirror::euler_batyrev(&p)?;
    out.emit(
        format!("euler_perverse={ep}\neuler_batyrev={eb}\n"),
        json!({ "euler_perverse": ep, "euler_batyrev": eb }),
    )?;
    if ep == eb {
        Ok(0)
    } else {
        eprintln!("verification failed: thm1_euler");
        Ok(1)
    }
}

/// Runs the verifier but keeps a failed report as a value; only input
/// and consistency problems remain errors.
fn verify_one(path: &Path) -> Result<mirror::MirrorReport, FileError> {
    let p = format::parse_polytope(path)?;
    match mirror::verify_mirror_pair(&p) {
        Ok(r) => Ok(r),
        Err(perverse_core::Error::VerificationFailed { report, .. }) => Ok(*report),
        Err(e) => Err(e.into()),
    }
}

fn verify_mirror_cmd(path: &Path, out: &Output) -> Result<i32, FileError> {
    if path.is_dir() {
        return verify_mirror_dir(path, out);
    }
    let r = verify_one(path)?;
    let mut j = report::mirror_json(&r);
    if let Value::Object(map) = &mut j {
        map.insert("file".into(), json!(file_name(path)));
    }
    out.emit(report::mirror_text(&r), j)?;
    match r.first_failure() {
        None => Ok(0),
        Some(key) => {
            eprintln!("verification failed: {key}");
            Ok(1)
        }
    }
}

fn verify_mirror_dir(dir: &Path, out: &Output) -> Result<i32, FileError> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| FileError::Io(dir.to_path_buf(), e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "poly"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(FileError::Io(
            dir.to_path_buf(),
            std::io::Error::new(std::io::ErrorKind::NotFound, "no .poly files"),
        ));
    }
    let results: Vec<(String, Result<mirror::MirrorReport, FileError>)> = files
        .par_iter()
        .map(|f| (file_name(f), verify_one(f)))
        .collect();

    let mut text = String::new();
    let mut entries = Vec::new();
    let mut passed = 0usize;
    let mut first_problem: Option<(String, i32)> = None;
    for (name, result) in &results {
        match result {
            Ok(r) if r.passed() => {
                passed += 1;
                text.push_str(&format!("{name}: pass\n"));
                let mut j = report::mirror_json(r);
                if let Value::Object(map) = &mut j {
                    map.insert("file".into(), json!(name));
                }
                entries.push(j);
            }
            Ok(r) => {
                let key = r.first_failure().unwrap_or("unknown");
                text.push_str(&format!("{name}: fail ({key})\n"));
                let mut j = report::mirror_json(r);
                if let Value::Object(map) = &mut j {
                    map.insert("file".into(), json!(name));
                }
                entries.push(j);
                first_problem.get_or_insert((format!("{name}: {key}"), 1));
            }
            Err(e) => {
                text.push_str(&format!("{name}: error ({e})\n"));
                entries.push(json!({ "file": name, "error": e.to_string() }));
                first_problem.get_or_insert((format!("{name}: {e}"), e.exit_code()));
            }
        }
    }
    text.push_str(&format!("passed {passed} of {}\n", results.len()));
    let j = json!({
        "results": entries,
        "total": results.len(),
        "passed": passed,
    });
    out.emit(text, j)?;
    match first_problem {
        None => Ok(0),
        Some((what, code)) => {
            eprintln!("verification failed: {what}");
            Ok(code)
        }
    }
}

fn config_hodge_cmd(
    path: &Path,
    against: Option<&Path>,
    out: &Output,
) -> Result<i32, FileError> {
    let cfg = format::parse_config(path)?;
    let detail = config::config_hodge_detail(&cfg);
    let euler = config::config_euler(&cfg)?;
    let mut text = report::config_text(&detail, euler);
    let mut j = report::config_json(&detail, euler);
    let mut code = 0;
    if let Some(poly_path) = against {
        let p = format::parse_polytope(poly_path)?;
        let inv = mirror::curve_invariants(&p)?;
        let cons = config::batyrev_consistency(&cfg, &inv)?;
        text.push_str(&report::consistency_text(&file_name(poly_path), &cons));
        if let Value::Object(map) = &mut j {
            map.insert("consistency".into(), report::consistency_json(&cons));
        }
        if !cons.rank_matches_b1 {
            eprintln!("verification failed: rank_delta_equals_b1");
            code = 1;
        } else if !cons.diamonds_match {
            eprintln!("verification failed: diamonds_match");
            code = 1;
        }
    }
    out.emit(text, j)?;
    Ok(code)
}

fn corpus_cmd(out: &Output) -> Result<i32, FileError> {
    let dir = out.out.clone().unwrap_or_else(|| PathBuf::from("corpus"));
    std::fs::create_dir_all(&dir).map_err(|e| FileError::Io(dir.clone(), e))?;
    let entries = perverse_core::corpus::corpus();
    for (name, p) in &entries {
        let file = dir.join(format!("{name}.poly"));
        std::fs::write(&file, format::polytope_to_string(p, Some(name)))
            .map_err(|e| FileError::Io(file.clone(), e))?;
    }
    let summary = Output { json: out.json, out: None };
    summary.emit(
        format!("wrote {} polytopes to {}\n", entries.len(), dir.display()),
        json!({ "count": entries.len(), "dir": dir.display().to_string() }),
    )?;
    Ok(0)
}
