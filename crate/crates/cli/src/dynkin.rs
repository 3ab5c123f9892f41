//! ASCII Dynkin diagrams.
//!
//! The main chain is the longest prefix `1..k` of nodes joined consecutively;
//! every remaining node is drawn above the chain node it attaches to.

use toda_core::root_systems::CartanMatrix;

const SPACING: usize = 4;

/// Bond between chain nodes `i` and `i + 1`, three characters wide. Arrows
/// point towards the short root.
fn bond(c: &CartanMatrix, i: usize, j: usize) -> &'static str {
    match (c.get(i, j), c.get(j, i)) {
        (-2, -1) => "==>",
        (-1, -2) => "<==",
        (-3, -1) => "=3>",
        (-1, -3) => "<3=",
        _ => "---",
    }
}

fn chain_length(c: &CartanMatrix) -> usize {
    let n = c.size();
    (1..n).find(|&i| c.get(i - 1, i) == 0).unwrap_or(n)
}

fn place(line: &mut Vec<char>, col: usize, text: &str) {
    let end = col + text.chars().count();
    if line.len() < end {
        line.resize(end, ' ');
    }
    for (k, ch) in text.chars().enumerate() {
        line[col + k] = ch;
    }
}

fn finish(line: Vec<char>) -> String {
    line.into_iter().collect::<String>().trim_end().to_string()
}

pub fn render(c: &CartanMatrix) -> String {
    let n = c.size();
    let k = chain_length(c);
    let mut rows: Vec<String> = Vec::new();

    // extra nodes, the last one topmost
    for extra in (k..n).rev() {
        let attach = (0..k).find(|&j| c.get(extra, j) != 0).unwrap_or(0);
        let col = attach * SPACING;
        for text in [format!("a{}", extra + 1), "o".into(), "|".into()] {
            let mut line = Vec::new();
            place(&mut line, col, &text);
            rows.push(finish(line));
        }
    }

    let mut chain = Vec::new();
    let mut labels = Vec::new();
    for i in 0..k {
        place(&mut chain, i * SPACING, "o");
        if i + 1 < k {
            place(&mut chain, i * SPACING + 1, bond(c, i, i + 1));
        }
        place(&mut labels, i * SPACING, &format!("a{}", i + 1));
    }
    rows.push(finish(chain));
    rows.push(finish(labels));
    rows.join("\n") + "\n"
}
