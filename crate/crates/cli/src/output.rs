//! Text output is a TOML document; numbers carry 17 significant digits so
//! every value re-parses to the same binary64.

use hepta::{DenseMatrix, EigenDecomposition, FamilyTag, HeptaParams, PowerPath, Spectrum};
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
}

pub fn num(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        format!("{x:.16e}")
    }
}

fn array(xs: impl IntoIterator<Item = f64>) -> String {
    let items: Vec<String> = xs.into_iter().map(num).collect();
    format!("[{}]", items.join(", "))
}

fn header(out: &mut String, command: &str, params: &HeptaParams) {
    writeln!(out, "command = \"{command}\"").unwrap();
    out.push_str(&crate::instance::format_instance(params));
}

fn text_matrix(out: &mut String, key: &str, m: &DenseMatrix) {
    writeln!(out, "{key} = [").unwrap();
    for i in 0..m.rows() {
        writeln!(out, "  {},", array(m.row(i).iter().copied())).unwrap();
    }
    out.push_str("]\n");
}

fn csv_rows(out: &mut String, m: &DenseMatrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|&x| num(x)).collect();
        writeln!(out, "{}", row.join(",")).unwrap();
    }
}

fn tag(t: FamilyTag) -> String {
    t.to_string()
}

pub fn spectrum_report(params: &HeptaParams, sp: &Spectrum, format: Format) -> String {
    let tagged = sp.tagged();
    let mut out = String::new();
    match format {
        Format::Text => {
            header(&mut out, "spectrum", params);
            writeln!(out, "eigenvalues = {}", array(tagged.iter().map(|t| t.0))).unwrap();
            let tags: Vec<String> = tagged.iter().map(|t| format!("\"{}\"", tag(t.2))).collect();
            writeln!(out, "families = [{}]", tags.join(", ")).unwrap();
            let brackets: Vec<String> = tagged.iter().map(|t| array([t.1 .0, t.1 .1])).collect();
            writeln!(out, "brackets = [{}]", brackets.join(", ")).unwrap();
        }
        Format::Csv => {
            out.push_str("index,eigenvalue,family,bracket_low,bracket_high\n");
            for (k, (v, (lo, hi), t)) in tagged.iter().enumerate() {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    k,
                    num(*v),
                    tag(*t),
                    num(*lo),
                    num(*hi)
                )
                .unwrap();
            }
        }
    }
    out
}

pub fn eigvecs_report(params: &HeptaParams, eig: &EigenDecomposition, format: Format) -> String {
    let mut out = String::new();
    let n = eig.len();
    match format {
        Format::Text => {
            header(&mut out, "eigvecs", params);
            writeln!(out, "eigenvalues = {}", array(eig.values().iter().copied())).unwrap();
            let tags: Vec<String> = eig
                .family_tags()
                .iter()
                .map(|&t| format!("\"{}\"", tag(t)))
                .collect();
            writeln!(out, "families = [{}]", tags.join(", ")).unwrap();
            // one eigenvector per line
            text_matrix(&mut out, "eigenvectors", &eig.vectors().transpose());
        }
        Format::Csv => {
            let cols: Vec<String> = (1..=n).map(|i| format!("q{i}")).collect();
            writeln!(out, "eigenvalue,family,{}", cols.join(",")).unwrap();
            for k in 0..n {
                let q: Vec<String> = eig.vectors().column(k).iter().map(|&x| num(x)).collect();
                writeln!(
                    out,
                    "{},{},{}",
                    num(eig.values()[k]),
                    tag(eig.family_tags()[k]),
                    q.join(",")
                )
                .unwrap();
            }
        }
    }
    out
}

pub fn matrix_report(
    command: &str,
    params: &HeptaParams,
    extra: &[(&str, String)],
    m: &DenseMatrix,
    format: Format,
) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            header(&mut out, command, params);
            for (k, v) in extra {
                writeln!(out, "{k} = {v}").unwrap();
            }
            text_matrix(&mut out, "matrix", m);
        }
        Format::Csv => csv_rows(&mut out, m),
    }
    out
}

pub fn path_name(path: PowerPath) -> &'static str {
    match path {
        PowerPath::Identity => "identity",
        PowerPath::Alternant => "alternant",
        PowerPath::EigenFallback => "eigen-fallback",
    }
}
