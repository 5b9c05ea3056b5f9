//! Text and CSV renderings. JSON output is the artifact itself.

use std::fmt::Write as _;

use trivsource::exactfield::Cyclo;
use trivsource::export::{BrauerTableArtifact, LabeledMatrix};
use trivsource::tsring::verify::Report;

fn zeta_note(m: u32) -> String {
    if m == 1 {
        "all values rational".to_string()
    } else {
        format!("z = exp(2*pi*i/{m})")
    }
}

/// Rows of cells laid out in right-aligned columns after a left-aligned label column.
fn grid(out: &mut String, header: &[String], rows: &[Vec<String>]) {
    let ncols = header.len();
    let widths: Vec<usize> = (0..ncols)
        .map(|j| {
            rows.iter()
                .map(|r| r[j].chars().count())
                .chain([header[j].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |out: &mut String, cells: &[String]| {
        let mut s = String::new();
        for (j, c) in cells.iter().enumerate() {
            let pad = widths[j] - c.chars().count();
            if j == 0 {
                s.push_str(c);
                s.push_str(&" ".repeat(pad));
            } else {
                s.push_str("  ");
                s.push_str(&" ".repeat(pad));
                s.push_str(c);
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(out, header);
    for r in rows {
        line(out, r);
    }
}

pub fn matrix_text(title: &str, mat: &LabeledMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{title} (p = {}, {})", mat.p, zeta_note(mat.m));
    out.push_str("columns:\n");
    for (j, c) in mat.col_labels.iter().enumerate() {
        let _ = writeln!(out, "  c{j} = {c}");
    }
    let mut header = vec![String::new()];
    header.extend((0..mat.col_labels.len()).map(|j| format!("c{j}")));
    let rows: Vec<Vec<String>> = mat
        .row_labels
        .iter()
        .zip(&mat.entries)
        .map(|(l, r)| {
            let mut cells = vec![l.clone()];
            cells.extend(r.iter().map(|x| x.to_string()));
            cells
        })
        .collect();
    grid(&mut out, &header, &rows);
    out
}

pub fn matrix_csv(mat: &LabeledMatrix) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["label".to_string()];
    header.extend(mat.col_labels.iter().cloned());
    w.write_record(&header)?;
    for (l, r) in mat.row_labels.iter().zip(&mat.entries) {
        let mut rec = vec![l.clone()];
        rec.extend(r.iter().map(|x| x.to_string()));
        w.write_record(&rec)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// `c*[N]`, with the coefficient dropped when it is 1.
fn term(c: &Cyclo, basis: &str) -> String {
    let coeff = match c.as_rational() {
        Some(r) if *r == num_one() => String::new(),
        Some(r) if *r == -num_one() => "-".to_string(),
        Some(r) => format!("{r}*"),
        None => format!("({c})*"),
    };
    format!("{coeff}[N {basis}]")
}

fn num_one() -> trivsource::exactfield::Rat {
    trivsource::exactfield::rat(1, 1)
}

/// One expansion per species index.
pub fn idempotents_text(mat: &LabeledMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "primitive idempotents in the canonical basis (p = {}, {})",
        mat.p,
        zeta_note(mat.m)
    );
    for (l, r) in mat.row_labels.iter().zip(&mat.entries) {
        let mut expr = String::new();
        for (c, b) in r.iter().zip(&mat.col_labels) {
            if c.is_zero() {
                continue;
            }
            let t = term(c, b);
            if expr.is_empty() {
                expr = t;
            } else if let Some(rest) = t.strip_prefix('-') {
                let _ = write!(expr, " - {rest}");
            } else {
                let _ = write!(expr, " + {t}");
            }
        }
        if expr.is_empty() {
            expr.push('0');
        }
        let _ = writeln!(out, "e[{l}] = {expr}");
    }
    out
}

pub fn brauer_text(bt: &BrauerTableArtifact) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Brauer table of N_G(P)/P for P = {} (order {}, p = {}, {})",
        bt.subgroup,
        bt.order,
        bt.p,
        zeta_note(bt.m)
    );
    out.push_str("classes:\n");
    for (s, (w, l)) in bt.classes.iter().zip(&bt.class_labels).enumerate() {
        let _ = writeln!(
            out,
            "  c{s} = {l} (word {w}, centralizer order {})",
            bt.centralizer_orders[s]
        );
    }
    let mut header = vec![String::new()];
    header.extend((0..bt.classes.len()).map(|s| format!("c{s}")));
    for (name, values) in [
        ("irreducible", &bt.irreducibles),
        ("projective", &bt.projectives),
    ] {
        let _ = writeln!(out, "{name} characters:");
        let rows: Vec<Vec<String>> = values
            .iter()
            .enumerate()
            .map(|(j, r)| {
                let mut cells = vec![format!("phi{j} (dim {})", bt.dims[j])];
                cells.extend(r.iter().map(|x| x.to_string()));
                cells
            })
            .collect();
        grid(&mut out, &header, &rows);
    }
    out
}

pub fn brauer_csv(bt: &BrauerTableArtifact) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![
        "kind".to_string(),
        "character".to_string(),
        "dim".to_string(),
    ];
    header.extend(bt.class_labels.iter().cloned());
    w.write_record(&header)?;
    for (name, values) in [
        ("irreducible", &bt.irreducibles),
        ("projective", &bt.projectives),
    ] {
        for (j, r) in values.iter().enumerate() {
            let mut rec = vec![name.to_string(), format!("phi{j}"), bt.dims[j].to_string()];
            rec.extend(r.iter().map(|x| x.to_string()));
            w.write_record(&rec)?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn report_text(report: &Report) -> String {
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    let mut out = report.to_string();
    if failed == 0 {
        let _ = writeln!(out, "all {} properties hold", report.checks.len());
    } else {
        let _ = writeln!(out, "{failed} of {} properties failed", report.checks.len());
    }
    out
}

pub fn report_csv(report: &Report) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["property", "passed", "detail"])?;
    for c in &report.checks {
        w.write_record([c.name, if c.passed { "true" } else { "false" }, &c.detail])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
