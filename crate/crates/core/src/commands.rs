//! The command-line operations as library functions. Each returns what
//! should go to standard output and standard error, and the exit code.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use crate::algebra::AlgebraKind;
use crate::error::{Error, Result};
use crate::generate::{generate, GenConfig};
use crate::io::{
    action_from_file, load_pcm, load_pcm_file, morphism_from_file, morphism_to_file, parse_json, pcm_to_file,
    resolve, sub_to_json, to_json, words_to_json, AnyFile, AnyPcm, Codec, ElemParse, ObjectFile, PcmFile,
};
use crate::peiffer::{coproduct_xmod, peiffer_commutator, peiffer_product, peiffer_words, reflect, PeifferProduct};
use crate::pxmod::{Pcm, SubPcm};
use crate::theorems::{run_suite, tally, SuiteConfig};
use crate::variety::{Algebras, Groups};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn failure(e: &Error) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        }
    }
}

fn finish(r: Result<Output>) -> Output {
    r.unwrap_or_else(|e| Output::failure(&e))
}

fn base_of(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

fn write_out(dir: &Path, name: &str, contents: &str) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::malformed(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(|e| Error::malformed(format!("{}: {e}", path.display())))
}

fn read_any(path: &Path) -> Result<AnyFile> {
    crate::io::read_file(path)
}

fn is_group(variety: &str) -> bool {
    variety == "group"
}

/// Parses and validates any input file: object, action, pre-crossed
/// module or morphism.
pub fn cmd_validate(path: &Path, format: Format) -> Output {
    let out = finish((|| {
        let base = base_of(path);
        let summary = match read_any(path)? {
            AnyFile::Pcm(f) => {
                let p = load_pcm_file(&f, base)?;
                format!("valid pre-crossed module {}", p.name())
            }
            AnyFile::Morphism(m) => {
                let (src, _) = resolve(&m.source, base)?;
                if is_group(&src.variety) {
                    morphism_from_file::<Groups>(&m, base)?;
                } else {
                    AlgebraKind::parse(&src.variety)?;
                    morphism_from_file::<Algebras>(&m, base)?;
                }
                "valid morphism of pre-crossed modules".to_string()
            }
            AnyFile::Action(a) => {
                if is_group(&a.variety) {
                    action_from_file::<Groups>(&a, base)?;
                } else {
                    AlgebraKind::parse(&a.variety)?;
                    action_from_file::<Algebras>(&a, base)?;
                }
                "valid action".to_string()
            }
            AnyFile::Object(o) => match &o {
                ObjectFile::Group(_) => format!("valid group {}", Groups::object_from_file(&o)?.name()),
                ObjectFile::Algebra(_) => format!("valid algebra {}", Algebras::object_from_file(&o)?.name()),
            },
        };
        let stdout = match format {
            Format::Json => to_json(&json!({ "valid": true, "summary": summary })),
            Format::Text => format!("{summary}\n"),
        };
        Ok(Output {
            stdout,
            stderr: format!("{summary}\n"),
            code: 0,
        })
    })());
    // failures still report on stdout in JSON mode
    if out.code != 0 && format == Format::Json {
        let error = out.stderr.trim_start_matches("error: ").trim().to_string();
        return Output {
            stdout: to_json(&json!({ "valid": false, "error": error })),
            ..out
        };
    }
    out
}

/// Exit 0 when the module is crossed, 1 with a witness otherwise.
pub fn cmd_check_crossed(path: &Path, format: Format) -> Output {
    finish((|| {
        let p = load_pcm(path)?;
        let (name, witness) = match &p {
            AnyPcm::Group(g) => (g.name.clone(), g.crossed_witness()),
            AnyPcm::Algebra(a) => (a.name.clone(), a.crossed_witness()),
        };
        let summary = match &witness {
            None => format!("{name} is a crossed module"),
            Some(w) => format!("{name} is not crossed: Peiffer identity fails at {w}"),
        };
        let stdout = match format {
            Format::Json => to_json(&json!({ "crossed": witness.is_none(), "witness": witness })),
            Format::Text => format!("{summary}\n"),
        };
        Ok(Output {
            stdout,
            stderr: format!("{summary}\n"),
            code: if witness.is_none() { 0 } else { 1 },
        })
    })())
}

/// `all`, `none`, or a JSON list of elements, closed up to a `B`-stable
/// subobject.
fn parse_spec<V: ElemParse + Codec>(p: &Pcm<V>, spec: &str) -> Result<SubPcm<V>> {
    match spec.trim() {
        "all" => Ok(p.whole()),
        "none" | "0" => Ok(p.bottom()),
        s => {
            let v: Value = parse_json(s)?;
            let elems = V::parse_elems(&p.x, &v)?;
            SubPcm::generated(p.clone(), &elems)
        }
    }
}

fn commutator_for<V: ElemParse + Codec>(p: &Pcm<V>, xs: &str, ys: &str, format: Format) -> Result<Output> {
    let x = parse_spec(p, xs)?;
    let y = parse_spec(p, ys)?;
    let words = peiffer_words(&x, &y)?;
    let c = peiffer_commutator(&x, &y)?;
    let stdout = match format {
        Format::Json => to_json(&json!({
            "X": sub_to_json(&x),
            "Y": sub_to_json(&y),
            "commutator": sub_to_json(&c),
            "words": words_to_json(&p.x, &words),
        })),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "X = {} (order/dim {})", x.text(), x.size());
            let _ = writeln!(s, "Y = {} (order/dim {})", y.text(), y.size());
            let nontrivial = words.iter().filter(|w| !V::is_neutral(&p.x, &w.word)).count();
            let _ = writeln!(s, "{} Peiffer words, {} nontrivial", words.len(), nontrivial);
            let _ = writeln!(s, "<X,Y> = {} (order/dim {})", c.text(), c.size());
            s
        }
    };
    Ok(Output {
        stdout,
        stderr: format!("<X,Y> has order/dim {}\n", c.size()),
        code: 0,
    })
}

/// `⟨X, Y⟩` for subobjects given by generator specs.
pub fn cmd_commutator(path: &Path, xs: &str, ys: &str, format: Format) -> Output {
    finish((|| match load_pcm(path)? {
        AnyPcm::Group(p) => commutator_for(&p, xs, ys, format),
        AnyPcm::Algebra(p) => commutator_for(&p, xs, ys, format),
    })())
}

fn product_json<V: Codec>(p: &PeifferProduct<V>) -> Value {
    json!({
        "product": pcm_to_file(&p.result),
        "l_X": morphism_to_file(&p.lx),
        "l_Y": morphism_to_file(&p.ly),
        "relations": sub_to_json(&p.relations),
    })
}

fn emit_product<V: Codec>(p: &PeifferProduct<V>, format: Format, out: Option<&Path>, stem: &str) -> Result<Output> {
    if let Some(dir) = out {
        write_out(dir, &format!("{stem}.json"), &to_json(&pcm_to_file(&p.result)))?;
        write_out(dir, "l_X.json", &to_json(&morphism_to_file(&p.lx)))?;
        write_out(dir, "l_Y.json", &to_json(&morphism_to_file(&p.ly)))?;
    }
    let summary = format!(
        "{}: carrier of order/dim {}, relations of order/dim {}, {}",
        p.result.name,
        V::size(&p.result.x),
        p.relations.size(),
        if p.result.is_crossed() { "crossed" } else { "not crossed" }
    );
    let stdout = match format {
        Format::Json => to_json(&product_json(p)),
        Format::Text => format!("{summary}\n"),
    };
    Ok(Output {
        stdout,
        stderr: format!("{summary}\n"),
        code: 0,
    })
}

fn load_pair(px: &Path, py: &Path) -> Result<(AnyPcm, AnyPcm)> {
    Ok((load_pcm(px)?, load_pcm(py)?))
}

/// `X ⋈ Y` with `l_X` and `l_Y`.
pub fn cmd_product(px: &Path, py: &Path, format: Format, out: Option<&Path>) -> Output {
    finish((|| match load_pair(px, py)? {
        (AnyPcm::Group(x), AnyPcm::Group(y)) => emit_product(&peiffer_product(&x, &y)?, format, out, "product"),
        (AnyPcm::Algebra(x), AnyPcm::Algebra(y)) => emit_product(&peiffer_product(&x, &y)?, format, out, "product"),
        _ => Err(Error::mismatch("both modules must be of the same variety")),
    })())
}

/// The coproduct of two crossed modules.
pub fn cmd_coproduct(px: &Path, py: &Path, format: Format, out: Option<&Path>) -> Output {
    finish((|| match load_pair(px, py)? {
        (AnyPcm::Group(x), AnyPcm::Group(y)) => emit_product(&coproduct_xmod(&x, &y)?, format, out, "coproduct"),
        (AnyPcm::Algebra(x), AnyPcm::Algebra(y)) => emit_product(&coproduct_xmod(&x, &y)?, format, out, "coproduct"),
        _ => Err(Error::mismatch("both modules must be of the same variety")),
    })())
}

fn reflect_for<V: Codec>(a: &Pcm<V>, format: Format, out: Option<&Path>) -> Result<Output> {
    let r = reflect(a)?;
    if let Some(dir) = out {
        write_out(dir, "reflection.json", &to_json(&pcm_to_file(r.crossed())))?;
        write_out(dir, "eta.json", &to_json(&morphism_to_file(&r.eta)))?;
    }
    let summary = format!(
        "{}: <A,A> = {} of order/dim {}",
        r.crossed().name,
        r.commutator.text(),
        r.commutator.size()
    );
    let stdout = match format {
        Format::Json => to_json(&json!({
            "reflection": pcm_to_file(r.crossed()),
            "eta": morphism_to_file(&r.eta),
            "commutator": sub_to_json(&r.commutator),
        })),
        Format::Text => format!("{summary}\n"),
    };
    Ok(Output {
        stdout,
        stderr: format!("{summary}\n"),
        code: 0,
    })
}

/// The crossed module `A/⟨A, A⟩` with `η`.
pub fn cmd_reflect(path: &Path, format: Format, out: Option<&Path>) -> Output {
    finish((|| match load_pcm(path)? {
        AnyPcm::Group(p) => reflect_for(&p, format, out),
        AnyPcm::Algebra(p) => reflect_for(&p, format, out),
    })())
}

/// Runs the theorem suite. JSON lines on stdout, one per report; exit 1 if
/// any check fails.
pub fn cmd_check_theorems(cfg: &SuiteConfig, format: Format) -> Output {
    let reports = run_suite(cfg);
    let mut stdout = String::new();
    for r in &reports {
        match format {
            Format::Json => {
                stdout.push_str(&serde_json::to_string(r).expect("serializable report"));
                stdout.push('\n');
            }
            Format::Text => {
                let verdict = if r.passed() { "pass" } else { "FAIL" };
                let _ = write!(stdout, "{verdict:4} {:26} {} ({} checked)", r.check, r.instance, r.checked);
                if let Some(w) = &r.witness {
                    let _ = write!(stdout, ": {w}");
                }
                stdout.push('\n');
            }
        }
    }
    let (passed, failed) = tally(&reports);
    let mut stderr = format!("{} checks: {passed} passed, {failed} failed\n", reports.len());
    for r in reports.iter().filter(|r| !r.passed()) {
        let _ = writeln!(stderr, "  {} on {}: {}", r.check, r.instance, r.witness.as_deref().unwrap_or(""));
    }
    Output {
        stdout,
        stderr,
        code: if failed == 0 { 0 } else { 1 },
    }
}

fn file_stem(i: usize) -> String {
    format!("r{i:04}.json")
}

/// Emits validated random instances, to `out` as one file each or to stdout
/// as JSON lines.
pub fn cmd_generate(cfg: &GenConfig, format: Format, out: Option<&Path>) -> Output {
    finish((|| {
        let gen = generate(cfg);
        let files: Vec<PcmFile> = gen.instances.iter().map(AnyPcm::to_file).collect();
        let mut stdout = String::new();
        if let Some(dir) = out {
            for (i, f) in files.iter().enumerate() {
                write_out(dir, &file_stem(i), &to_json(f))?;
            }
        } else {
            for f in &files {
                match format {
                    Format::Json => {
                        stdout.push_str(&serde_json::to_string(f).expect("serializable instance"));
                        stdout.push('\n');
                    }
                    Format::Text => {
                        let _ = writeln!(stdout, "{}", f.name);
                    }
                }
            }
        }
        let mut stderr = format!("{} instances in {} attempts\n", files.len(), gen.attempts);
        for w in &gen.warnings {
            let _ = writeln!(stderr, "warning: {w}");
        }
        Ok(Output { stdout, stderr, code: 0 })
    })())
}
