//! Fixed-width text rendering.

use std::fmt::Write;

use crate::characters::BiClassFunction;
use crate::stable::{StableCohomologyResult, TableRow};

/// Left-aligned columns separated by two spaces, header underlined with `-`.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = String::new();
    writeln!(out, "{}", line(header.iter().map(|s| s.to_string()).collect())).unwrap();
    writeln!(out, "{}", line(widths.iter().map(|w| "-".repeat(*w)).collect())).unwrap();
    for row in rows {
        writeln!(out, "{}", line(row.clone())).unwrap();
    }
    out
}

pub fn bicharacter_table(f: &BiClassFunction, header: [&str; 3]) -> String {
    let rows: Vec<Vec<String>> = f
        .values()
        .iter()
        .map(|((s, t), v)| vec![s.to_string(), t.to_string(), v.to_string()])
        .collect();
    table(&header, &rows)
}

pub fn stable_result(r: &StableCohomologyResult) -> String {
    let mut out = String::new();
    let lhs = format!("H^{}(Aut(F_n); K_{{{},{}}}(n))", r.degree, r.p, r.q);
    if r.is_zero() {
        writeln!(out, "{lhs} = 0").unwrap();
        writeln!(out, "stable range: {} (n >= {})", r.valid_range(), r.valid_n_bound()).unwrap();
        return out;
    }
    writeln!(out, "{lhs} = sgn_{} (x) Q P_{{{},{}}}", r.p, r.p, r.q).unwrap();
    writeln!(out, "dimension: {}", r.dimension).unwrap();
    writeln!(out, "stable range: {} (n >= {})", r.valid_range(), r.valid_n_bound()).unwrap();
    writeln!(out, "decomposition:").unwrap();
    let rows: Vec<Vec<String>> = r
        .decomposition
        .iter()
        .map(|((l, m), mult)| vec![l.to_string(), m.to_string(), mult.to_string()])
        .collect();
    out.push_str(&table(&["lambda", "mu", "mult"], &rows));
    writeln!(out, "character:").unwrap();
    out.push_str(&bicharacter_table(&r.bicharacter, ["sigma", "tau", "value"]));
    out
}

pub fn dimension_table(rows: &[TableRow]) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.p.to_string(),
                r.q.to_string(),
                r.degree.to_string(),
                r.dimension.to_string(),
                r.valid_n_bound.to_string(),
            ]
        })
        .collect();
    table(&["p", "q", "degree", "dimension", "min n"], &body)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_align() {
        let t = table(&["a", "bbb"], &[vec!["xx".into(), "y".into()]]);
        assert_eq!(t, "a   bbb\n--  ---\nxx  y\n");
    }
}
