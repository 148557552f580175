//! Littlewood-Richardson coefficients by enumeration of LR skew tableaux.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::symcore::Partition;

/// c^gamma_{alpha, beta}: number of LR tableaux of shape gamma/alpha and content beta.
pub fn lr_coeff(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if gamma.size() != alpha.size() + beta.size() || !gamma.contains(alpha) || !gamma.contains(beta)
    {
        return 0;
    }
    // cells in reading order: rows top to bottom, right to left
    let mut cells = Vec::new();
    for r in 0..gamma.len() {
        let lo = alpha.part(r);
        for c in (lo..gamma.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let content: Vec<u32> = beta.parts().to_vec();
    let mut filling: HashMap<(usize, u32), usize> = HashMap::new();
    let mut counts = vec![0u32; content.len()];
    let mut total = 0u64;
    search(0, &cells, alpha, gamma, &content, &mut counts, &mut filling, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn search(
    idx: usize,
    cells: &[(usize, u32)],
    alpha: &Partition,
    gamma: &Partition,
    content: &[u32],
    counts: &mut Vec<u32>,
    filling: &mut HashMap<(usize, u32), usize>,
    total: &mut u64,
) {
    if idx == cells.len() {
        if counts.iter().zip(content).all(|(a, b)| a == b) {
            *total += 1;
        }
        return;
    }
    let (r, c) = cells[idx];
    // row weakly increasing: value <= right neighbour (already placed)
    let upper = if c + 1 < gamma.part(r) {
        filling[&(r, c + 1)]
    } else {
        content.len() - 1
    };
    // column strictly increasing: value > entry above when it is in the skew shape
    let lower = if r > 0 && c >= alpha.part(r - 1) {
        filling[&(r - 1, c)] + 1
    } else {
        0
    };
    let upper = upper.min(r);
    for v in lower..=upper {
        if counts[v] >= content[v] {
            continue;
        }
        if v > 0 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        counts[v] += 1;
        filling.insert((r, c), v);
        search(idx + 1, cells, alpha, gamma, content, counts, filling, total);
        filling.remove(&(r, c));
        counts[v] -= 1;
    }
}

type ProductKey = (Partition, Partition, usize);
type ProductTable = Arc<Vec<(Partition, u64)>>;

fn cache() -> &'static Mutex<HashMap<ProductKey, ProductTable>> {
    static CACHE: OnceLock<Mutex<HashMap<ProductKey, ProductTable>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Nonzero LR coefficients of s_alpha * s_beta restricted to at most `rows` rows.
pub fn lr_product(alpha: &Partition, beta: &Partition, rows: usize) -> ProductTable {
    let (alpha, beta) = if alpha <= beta { (alpha, beta) } else { (beta, alpha) };
    let key = (alpha.clone(), beta.clone(), rows);
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let n = alpha.size() + beta.size();
    let max_rows = rows.min(alpha.len() + beta.len());
    let mut out = BTreeMap::new();
    if alpha.len() <= rows && beta.len() <= rows {
        for gamma in Partition::of_size(n, max_rows) {
            if !gamma.contains(alpha) || !gamma.contains(beta) {
                continue;
            }
            let c = lr_coeff(alpha, beta, &gamma);
            if c > 0 {
                out.insert(gamma, c);
            }
        }
    }
    let table: ProductTable = Arc::new(out.into_iter().collect());
    cache().lock().unwrap().insert(key, table.clone());
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &[u32]) -> Partition {
        Partition::from_slice(s)
    }

    #[test]
    fn pieri_cases() {
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[3])), 0);
    }

    #[test]
    fn classic_two() {
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn unit() {
        let t = lr_product(&Partition::empty(), &p(&[3, 1]), 4);
        assert_eq!(t.as_slice(), &[(p(&[3, 1]), 1)]);
    }
}
