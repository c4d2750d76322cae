//! Mutually orthogonal Latin squares and Latin semiintersecting families.
//!
//! A Latin family for `(k, k²)` arranges `A` as a `k×k` grid (cell `(i, j)`
//! is point `i·k + j`) and partitions `B` into blocks
//! `B_t = {N + t·k, .., N + (t+1)·k - 1}`. Rows pair with `B_0`, columns
//! with `B_1`, and the symbol classes of square `s` with `B_{s+2}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::gf_field::Field;
use crate::set_family::{verify_semiintersecting, FamilyParams, MemberSet, SetFamily};

/// An `n×n` grid over symbols `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MolsSquare {
    n: usize,
    cells: Vec<u32>,
}

impl MolsSquare {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Malformed("empty square".into()));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&s) = row.iter().find(|&&s| s as usize >= n) {
                return Err(Error::Malformed(format!("symbol {s} out of range 0..{n}")));
            }
            cells.extend(row);
        }
        Ok(MolsSquare { n, cells })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.cells[row * self.n + col]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.cells.chunks(self.n).map(|r| r.to_vec()).collect()
    }
}

impl fmt::Display for MolsSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.cells.chunks(self.n) {
            let line: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Parses squares written as `n` lines of `n` space-separated symbols,
/// consecutive squares separated by blank lines.
pub fn parse_squares(text: &str) -> Result<Vec<MolsSquare>> {
    let mut squares = Vec::new();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let flush = |rows: &mut Vec<Vec<u32>>, squares: &mut Vec<MolsSquare>| -> Result<()> {
        if !rows.is_empty() {
            squares.push(MolsSquare::from_rows(std::mem::take(rows))?);
        }
        Ok(())
    };
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            flush(&mut rows, &mut squares)?;
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Malformed(format!("line {}: bad symbol {t:?}", lineno + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    flush(&mut rows, &mut squares)?;
    Ok(squares)
}

pub fn format_squares(squares: &[MolsSquare]) -> String {
    squares
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

/// The `q-1` squares `L_a(i, j) = a·i + j` for nonzero `a`.
pub fn mols_from_field(f: &Field) -> Vec<MolsSquare> {
    let n = f.order() as usize;
    f.elements()
        .skip(1)
        .map(|a| {
            let cells = f
                .elements()
                .flat_map(|i| f.elements().map(move |j| (i, j)))
                .map(|(i, j)| f.add(f.mul(a, i), j).index())
                .collect();
            MolsSquare { n, cells }
        })
        .collect()
}

pub fn verify_latin(s: &MolsSquare) -> bool {
    let n = s.n;
    (0..n).all(|i| {
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        (0..n).all(|j| {
            let (r, c) = (s.get(i, j) as usize, s.get(j, i) as usize);
            !std::mem::replace(&mut row[r], true) && !std::mem::replace(&mut col[c], true)
        })
    })
}

/// True iff the `n²` ordered pairs `(a[i][j], b[i][j])` are all distinct.
pub fn verify_orthogonal(a: &MolsSquare, b: &MolsSquare) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::OrderMismatch(a.n, b.n));
    }
    let n = a.n;
    let mut seen = vec![false; n * n];
    Ok(a.cells
        .iter()
        .zip(&b.cells)
        .all(|(&x, &y)| !std::mem::replace(&mut seen[x as usize * n + y as usize], true)))
}

/// Builds the Latin family of size `k·(m+2)` from `m ≤ k-2` pairwise
/// orthogonal squares of order `k`.
pub fn latin_family_from_mols(squares: &[MolsSquare], k: usize) -> Result<SetFamily> {
    if let Some(s) = squares.iter().find(|s| s.n != k) {
        return Err(Error::OrderMismatch(s.n, k));
    }
    if squares.len() + 2 > k {
        return Err(Error::TooManySquares {
            count: squares.len(),
            max: k.saturating_sub(2),
            k,
        });
    }
    if let Some(i) = squares.iter().position(|s| !verify_latin(s)) {
        return Err(Error::NotLatin(i));
    }
    for i in 0..squares.len() {
        for j in i + 1..squares.len() {
            if !verify_orthogonal(&squares[i], &squares[j])? {
                return Err(Error::NotOrthogonal(i, j));
            }
        }
    }

    let n = k * k;
    let params = FamilyParams::new(k, n)?;
    let block = |t: usize| BitSet::from_indices(n, t * k..(t + 1) * k);
    let mut members = Vec::with_capacity(k * (squares.len() + 2));
    for i in 0..k {
        let row = BitSet::from_indices(n, (0..k).map(|j| i * k + j));
        members.push(MemberSet::from_bits(row, block(0)));
    }
    for j in 0..k {
        let col = BitSet::from_indices(n, (0..k).map(|i| i * k + j));
        members.push(MemberSet::from_bits(col, block(1)));
    }
    for (s, sq) in squares.iter().enumerate() {
        let mut classes = vec![BitSet::new(n); k];
        for i in 0..k {
            for j in 0..k {
                classes[sq.get(i, j) as usize].insert(i * k + j);
            }
        }
        let b = block(s + 2);
        members.extend(
            classes
                .into_iter()
                .map(|c| MemberSet::from_bits(c, b.clone())),
        );
    }
    Ok(SetFamily::new(
        params,
        members,
        format!("latin(k={k},squares={})", squares.len()),
    ))
}

/// Recovers `l-2` orthogonal squares from a Latin family with `l` occupied
/// B-blocks.
///
/// Members are grouped by their B-part, groups ordered by smallest B point.
/// The first group gives the rows and the second the columns, each ordered
/// by smallest A point; every further group gives one square whose symbols
/// number its members in the same order.
pub fn mols_from_latin_family(fam: &SetFamily) -> Result<Vec<MolsSquare>> {
    let FamilyParams { k, n } = fam.params();
    if n != k * k {
        return Err(Error::NotLatinFamily(format!("N={n} is not k²={}", k * k)));
    }
    let report = verify_semiintersecting(fam);
    if !report.valid {
        return Err(Error::NotLatinFamily(format!(
            "not semiintersecting ({} violations)",
            report.violations.len()
        )));
    }

    let mut groups: BTreeMap<usize, Vec<&MemberSet>> = BTreeMap::new();
    for m in fam.members() {
        let key = m.b_bits().first().expect("members have k >= 1 points");
        groups.entry(key).or_default().push(m);
    }
    let mut groups: Vec<Vec<&MemberSet>> = groups.into_values().collect();
    for (gi, g) in groups.iter().enumerate() {
        if g.iter().any(|m| m.b_bits() != g[0].b_bits()) {
            return Err(Error::NotLatinFamily(format!(
                "B-parts starting at the same point differ in group {gi}"
            )));
        }
        if g.len() != k {
            return Err(Error::NotLatinFamily(format!(
                "B-block {gi} is used {} times, expected 0 or {k}",
                g.len()
            )));
        }
    }
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            if groups[i][0].meets_in_b(groups[j][0]) {
                return Err(Error::NotLatinFamily("B-blocks overlap".into()));
            }
        }
    }
    if groups.len() < 3 {
        return Err(Error::TooFewBlocks(groups.len()));
    }
    for g in groups.iter_mut() {
        g.sort_by_key(|m| m.a_bits().first());
    }

    // Each group partitions the k² points of A; invert to point -> member.
    let owner = |g: &[&MemberSet]| -> Vec<usize> {
        let mut o = vec![usize::MAX; n];
        for (idx, m) in g.iter().enumerate() {
            m.a_bits().iter().for_each(|p| o[p] = idx);
        }
        o
    };
    let (rows, cols) = (&groups[0], &groups[1]);
    let mut cell_point = vec![0usize; n];
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in cols.iter().enumerate() {
            let mut common = r.a_bits().clone();
            common.intersect_with(c.a_bits());
            if common.count() != 1 {
                return Err(Error::NotLatinFamily(format!(
                    "row {i} and column {j} share {} points",
                    common.count()
                )));
            }
            cell_point[i * k + j] = common.first().unwrap();
        }
    }

    let squares: Vec<MolsSquare> = groups[2..]
        .iter()
        .map(|g| {
            let o = owner(g);
            MolsSquare {
                n: k,
                cells: cell_point.iter().map(|&p| o[p] as u32).collect(),
            }
        })
        .collect();
    if let Some(i) = squares.iter().position(|s| !verify_latin(s)) {
        return Err(Error::NotLatinFamily(format!(
            "group {} is not a Latin square",
            i + 2
        )));
    }
    Ok(squares)
}
