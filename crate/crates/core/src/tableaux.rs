//! Semi-standard (skew) tableaux, the charge statistic with its per-letter
//! index, the tableau ↔ highest-word correspondence, and the local index.

use crate::crystal::{CrystalElement, Flavor, TensorWord};
use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use std::fmt;

/// A semi-standard filling of a (skew) shape: rows weakly increase left to
/// right, columns strictly increase top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    /// rows[r] holds the values of row r, columns inner_r..outer_r (0-based).
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer = shape.outer();
        let inner = shape.inner();
        if rows.len() != outer.len() {
            return Err(Error::domain(format!(
                "expected {} rows, got {}",
                outer.len(),
                rows.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            let width = (outer.part(r) - inner.part(r)) as usize;
            if row.len() != width {
                return Err(Error::domain(format!(
                    "row {r} must have {width} cells, got {}",
                    row.len()
                )));
            }
            if row.iter().any(|&v| v == 0) {
                return Err(Error::domain("cell values must be positive"));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::domain(format!("row {r} must weakly increase")));
            }
        }
        let t = Tableau { shape, rows };
        for r in 1..t.rows.len() {
            let outer_r = t.shape.outer().part(r) as usize;
            let inner_r = t.shape.inner().part(r) as usize;
            for c in inner_r..outer_r {
                if let (Some(above), Some(here)) = (t.value_at(r - 1, c), t.value_at(r, c)) {
                    if here <= above {
                        return Err(Error::domain(format!(
                            "column {c} must strictly increase between rows {} and {r}",
                            r - 1
                        )));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Value at (row, col), 0-based, None outside the shape.
    pub fn value_at(&self, row: usize, col: usize) -> Option<u32> {
        if !self.shape.has_cell(row, col) {
            return None;
        }
        let inner = self.shape.inner().part(row) as usize;
        self.rows.get(row).and_then(|r| r.get(col - inner)).copied()
    }

    pub fn size(&self) -> u64 {
        self.shape.size()
    }

    pub fn max_value(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Content vector: counts[j] = #cells with value j+1, up to the maximum
    /// value present.
    pub fn content(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.max_value() as usize];
        for v in self.rows.iter().flatten() {
            counts[(*v - 1) as usize] += 1;
        }
        counts
    }

    /// Cells (row, col, value) in the reading order used by the extraction
    /// procedure: rows top to bottom, right to left within a row.
    pub fn reading_cells(&self) -> Vec<(usize, usize, u32)> {
        let mut cells = Vec::with_capacity(self.size() as usize);
        for (r, row) in self.rows.iter().enumerate() {
            let inner = self.shape.inner().part(r) as usize;
            for (off, &v) in row.iter().enumerate().rev() {
                cells.push((r, inner + off, v));
            }
        }
        cells
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows.len() {
            if r > 0 {
                writeln!(f)?;
            }
            let inner = self.shape.inner().part(r) as usize;
            let mut parts: Vec<String> = vec![".".into(); inner];
            parts.extend(self.rows[r].iter().map(|v| v.to_string()));
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// All semi-standard tableaux of the given shape and content μ, in the
/// lexicographic order of their row-major readings.
pub fn enumerate_tableaux(shape: &SkewShape, mu: &Partition) -> Result<Vec<Tableau>> {
    if shape.size() != mu.size() {
        return Err(Error::domain(format!(
            "shape size {} does not match weight size {}",
            shape.size(),
            mu.size()
        )));
    }
    // cells in row-major order
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..shape.outer().len() {
        for c in shape.inner().part(r) as usize..shape.outer().part(r) as usize {
            cells.push((r, c));
        }
    }
    let mut remaining: Vec<u32> = mu.parts().to_vec();
    let mut grid: Vec<Vec<u32>> = (0..shape.outer().len())
        .map(|r| vec![0; (shape.outer().part(r) - shape.inner().part(r)) as usize])
        .collect();
    let mut out = Vec::new();

    fn cell_value(shape: &SkewShape, grid: &[Vec<u32>], r: usize, c: usize) -> Option<u32> {
        if !shape.has_cell(r, c) {
            return None;
        }
        let inner = shape.inner().part(r) as usize;
        let v = grid[r][c - inner];
        if v == 0 {
            None
        } else {
            Some(v)
        }
    }

    fn rec(
        shape: &SkewShape,
        cells: &[(usize, usize)],
        pos: usize,
        remaining: &mut Vec<u32>,
        grid: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if pos == cells.len() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: grid.clone(),
            });
            return;
        }
        let (r, c) = cells[pos];
        let inner = shape.inner().part(r) as usize;
        let left = if c > 0 { cell_value(shape, grid, r, c - 1) } else { None };
        let above = if r > 0 { cell_value(shape, grid, r - 1, c) } else { None };
        let min_v = left.unwrap_or(1).max(above.map_or(1, |a| a + 1));
        for v in min_v..=remaining.len() as u32 {
            if remaining[(v - 1) as usize] == 0 {
                continue;
            }
            remaining[(v - 1) as usize] -= 1;
            grid[r][c - inner] = v;
            rec(shape, cells, pos + 1, remaining, grid, out);
            grid[r][c - inner] = 0;
            remaining[(v - 1) as usize] += 1;
        }
    }

    rec(shape, &cells, 0, &mut remaining, &mut grid, &mut out);
    Ok(out)
}

/// One selected cell in the extraction procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub value: u32,
    pub row: usize,
    pub col: usize,
    /// Cumulative winding count when this cell was selected (its suffix).
    pub winding: u32,
}

/// Full trace of the charge extraction: one vector of selections per round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionRecord {
    pub rounds: Vec<Vec<Extraction>>,
}

impl ExtractionRecord {
    /// Suffixes per round, e.g. [[0,0,0,1,1],[0,0,1,2],[0,1]].
    pub fn suffix_rounds(&self) -> Vec<Vec<u32>> {
        self.rounds
            .iter()
            .map(|r| r.iter().map(|e| e.winding).collect())
            .collect()
    }
}

impl fmt::Display for ExtractionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, round) in self.rounds.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "round {}:", i + 1)?;
            for e in round {
                write!(f, " {}_{}@({},{})", e.value, e.winding, e.row + 1, e.col + 1)?;
            }
        }
        Ok(())
    }
}

fn partition_content(t: &Tableau) -> Result<Vec<u32>> {
    let content = t.content();
    if content.is_empty() {
        return Ok(content);
    }
    if content.windows(2).any(|w| w[0] < w[1]) || *content.last().unwrap() == 0 {
        return Err(Error::domain(format!(
            "charge needs partition content, got {content:?}"
        )));
    }
    Ok(content)
}

/// The charge statistic together with its extraction trace.
///
/// Cells are serialized top to bottom, right to left within rows; round r
/// selects one cell of each value 1..=μ'_r scanning cyclically, the suffix
/// of a selection being the number of wraps so far in the round. The charge
/// is the total of all suffixes. Skew tableaux run the same procedure on
/// their serialized cells.
pub fn charge(t: &Tableau) -> Result<(u64, ExtractionRecord)> {
    let content = partition_content(t)?;
    let cells = t.reading_cells();
    let mut alive = vec![true; cells.len()];
    let mut remaining = content;
    let mut rounds = Vec::new();
    let mut total = 0u64;
    while remaining.first().map_or(false, |&c| c > 0) {
        let vmax = remaining.iter().filter(|&&c| c > 0).count() as u32;
        let seq: Vec<usize> = (0..cells.len()).filter(|&i| alive[i]).collect();
        let mut selected = vec![false; seq.len()];
        let mut round = Vec::with_capacity(vmax as usize);
        let mut pos = 0usize;
        let mut winding = 0u32;
        for v in 1..=vmax {
            let mut scanned = 0usize;
            loop {
                if pos == seq.len() {
                    pos = 0;
                    winding += 1;
                }
                assert!(
                    scanned <= seq.len() + 1,
                    "value {v} not found in extraction round"
                );
                let idx = seq[pos];
                if !selected[pos] && cells[idx].2 == v {
                    selected[pos] = true;
                    let (r, c, _) = cells[idx];
                    round.push(Extraction { value: v, row: r, col: c, winding });
                    total += winding as u64;
                    pos += 1;
                    break;
                }
                pos += 1;
                scanned += 1;
            }
            remaining[(v - 1) as usize] -= 1;
        }
        for (p, &sel) in selected.iter().enumerate() {
            if sel {
                alive[seq[p]] = false;
            }
        }
        rounds.push(round);
    }
    Ok((total, ExtractionRecord { rounds }))
}

/// ind(j) = sum of suffixes attached to value j across rounds; the charge is
/// the total of the index vector.
pub fn index_vector(t: &Tableau) -> Result<Vec<u64>> {
    let content = partition_content(t)?;
    let (_, record) = charge(t)?;
    let mut ind = vec![0u64; content.len()];
    for round in &record.rounds {
        for e in round {
            ind[(e.value - 1) as usize] += e.winding as u64;
        }
    }
    Ok(ind)
}

/// The highest-word image of a tableau.
///
/// Row flavor: factor i is the multiset of row indices of the cells valued
/// i (an element of B_{μ_iΛ1}); needs n ≥ l(λ). Column flavor: factor i is
/// the set of column indices of those cells (an element of B_{Λ_{μ_i}});
/// needs n ≥ λ₁. For skew shapes the word is relative to the inner shape:
/// it is highest exactly in the ν-dominated sense checked by
/// [`is_highest_relative`].
pub fn tableau_to_word(t: &Tableau, flavor: Flavor, rank: u32) -> Result<TensorWord> {
    let needed = match flavor {
        Flavor::Row => t.shape().outer().len() as u32,
        Flavor::Column => t.shape().outer().part(0),
    };
    if rank < needed.max(2) {
        return Err(Error::domain(format!(
            "rank {rank} too small, need at least {}",
            needed.max(2)
        )));
    }
    let content = t.content();
    if content.iter().any(|&c| c == 0) {
        return Err(Error::domain("content must have no gaps for the word map"));
    }
    if content.is_empty() {
        return Err(Error::domain("empty tableau has no word"));
    }
    let mut factors = Vec::with_capacity(content.len());
    for v in 1..=content.len() as u32 {
        let mut letters = Vec::new();
        for (r, row) in t.rows().iter().enumerate() {
            let inner = t.shape().inner().part(r) as usize;
            for (off, &val) in row.iter().enumerate() {
                if val == v {
                    let letter = match flavor {
                        Flavor::Row => r as u32 + 1,
                        Flavor::Column => (inner + off) as u32 + 1,
                    };
                    letters.push(letter);
                }
            }
        }
        letters.sort_unstable();
        factors.push(CrystalElement::new(flavor, rank, letters)?);
    }
    TensorWord::new(factors)
}

/// Inverse of [`tableau_to_word`] for straight shapes; the input must be a
/// highest word.
pub fn word_to_tableau(word: &TensorWord) -> Result<Tableau> {
    if !word.is_highest() {
        return Err(Error::domain("word is not highest weight"));
    }
    match word.flavor() {
        Flavor::Row => {
            let nrows = word
                .factors()
                .iter()
                .flat_map(|f| f.entries())
                .copied()
                .max()
                .unwrap_or(0) as usize;
            let mut rows: Vec<Vec<u32>> = vec![Vec::new(); nrows];
            for (v0, f) in word.factors().iter().enumerate() {
                for &r in f.entries() {
                    rows[(r - 1) as usize].push(v0 as u32 + 1);
                }
            }
            for row in &mut rows {
                row.sort_unstable();
            }
            let outer = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
            Tableau::new(SkewShape::straight(outer), rows)
        }
        Flavor::Column => {
            let ncols = word
                .factors()
                .iter()
                .flat_map(|f| f.entries())
                .copied()
                .max()
                .unwrap_or(0) as usize;
            let mut cols: Vec<Vec<u32>> = vec![Vec::new(); ncols];
            for (v0, f) in word.factors().iter().enumerate() {
                for &c in f.entries() {
                    cols[(c - 1) as usize].push(v0 as u32 + 1);
                }
            }
            for col in &mut cols {
                col.sort_unstable();
            }
            let heights: Vec<u32> = cols.iter().map(|c| c.len() as u32).collect();
            let conj = Partition::new(heights)?;
            let outer = conj.conjugate();
            let mut rows: Vec<Vec<u32>> = Vec::with_capacity(outer.len());
            for r in 0..outer.len() {
                let row: Vec<u32> = (0..outer.part(r) as usize).map(|c| cols[c][r]).collect();
                rows.push(row);
            }
            Tableau::new(SkewShape::straight(outer), rows)
        }
    }
}

/// Highest weight relative to an inner shape: ε_i(w) ≤ ν_i − ν_{i+1} for
/// all classical i, which is exactly highestness of u_ν ⊗ w. With ν empty
/// this is plain highestness. Column-flavored words should pass ν'.
pub fn is_highest_relative(word: &TensorWord, nu: &Partition) -> bool {
    (1..word.rank()).all(|i| {
        let budget = nu.part((i - 1) as usize) as i64 - nu.part(i as usize) as i64;
        (word.string_lengths(i).0 as i64) <= budget
    })
}

/// Result of chaining local indices through a sequence of columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalIndex {
    /// Per-step down-line counts: step s joins chain[s-1] to chain[s].
    pub steps: Vec<u64>,
    pub total: u64,
}

/// The local index of Definition-style LS lines.
///
/// `order` lists a1's letters in processing order (a permutation of its
/// entries). Lines are drawn from the first |next| letters of the current
/// order to the next column: the partner of a letter p is the unconnected
/// dot at the smallest position not above p (letter q ≤ p, maximal such),
/// wrapping to the bottom-most dot when none exists; a wrapped line is a
/// "down line". The step index counts down lines and the order induced on
/// the next column is the partner sequence.
pub fn local_index(
    a1: &CrystalElement,
    order: &[u32],
    chain: &[CrystalElement],
) -> Result<LocalIndex> {
    if a1.flavor() != Flavor::Column || chain.iter().any(|c| c.flavor() != Flavor::Column) {
        return Err(Error::domain("local index is defined for column elements"));
    }
    if chain.iter().any(|c| c.rank() != a1.rank()) {
        return Err(Error::domain("chain must share the rank of a1"));
    }
    let mut sorted_order = order.to_vec();
    sorted_order.sort_unstable();
    if sorted_order != a1.entries() {
        return Err(Error::domain("order must be a permutation of a1's letters"));
    }
    let mut sizes = vec![a1.size()];
    sizes.extend(chain.iter().map(|c| c.size()));
    if sizes.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::domain("sizes must weakly decrease along the chain"));
    }

    let mut cur_order: Vec<u32> = order.to_vec();
    let mut steps = Vec::with_capacity(chain.len());
    let mut total = 0u64;
    for next in chain {
        let letters = next.entries();
        let mut used = vec![false; letters.len()];
        let mut downs = 0u64;
        let mut induced = Vec::with_capacity(letters.len());
        for &p in cur_order.iter().take(letters.len()) {
            let direct = (0..letters.len())
                .filter(|&j| !used[j] && letters[j] <= p)
                .max_by_key(|&j| letters[j]);
            let j = match direct {
                Some(j) => j,
                None => {
                    downs += 1;
                    (0..letters.len())
                        .filter(|&j| !used[j])
                        .max_by_key(|&j| letters[j])
                        .expect("next column has unconnected dots")
                }
            };
            used[j] = true;
            induced.push(letters[j]);
        }
        total += downs;
        steps.push(downs);
        cur_order = induced;
    }
    Ok(LocalIndex { steps, total })
}

/// Index vector of a column word computed by chaining local indices with the
/// bottom-up order on the first factor: ind(i) = Σ_{j<i} step_j.
pub fn word_index_chain(word: &TensorWord) -> Result<Vec<u64>> {
    if word.flavor() != Flavor::Column {
        return Err(Error::domain("index chain is defined for column words"));
    }
    let factors = word.factors();
    let mut order: Vec<u32> = factors[0].entries().to_vec();
    order.reverse();
    let res = local_index(&factors[0], &order, &factors[1..])?;
    let mut ind = Vec::with_capacity(factors.len());
    let mut acc = 0u64;
    ind.push(0);
    for s in res.steps {
        acc += s;
        ind.push(acc);
    }
    Ok(ind)
}
