//! Plain-text results table.

use revkit_core::metrics::MetricsReport;

/// Renders one row per algorithm with aligned columns. The NSW cell
/// shows the all-papers geometric mean, and when papers scored zero it
/// appends the positive-papers mean in parentheses, e.g. `0.00 (1.72)`.
pub fn render(rows: &[(&str, &MetricsReport)]) -> String {
    let header = ["Alg.", "USW", "NSW", "Min Score", "EF1 Viol."];
    let mut cells: Vec<[String; 5]> = Vec::with_capacity(rows.len());
    for (name, report) in rows {
        let nsw = if report.zero_score_count > 0 {
            format!("{:.2} ({:.2})", report.nsw, report.nsw_positive)
        } else {
            format!("{:.2}", report.nsw)
        };
        cells.push([
            (*name).to_string(),
            format!("{:.2}", report.usw_mean),
            nsw,
            format!("{:.2}", report.min_score),
            report.ef1_violations.to_string(),
        ]);
    }

    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }

    let mut out = String::new();
    let mut push_row = |row: &[String]| {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    let header_row: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    push_row(&header_row);
    for row in &cells {
        push_row(row);
    }
    out
}
