//! Hand-derived generalized Seifert matrices for a few closures, each paired
//! with a braid presenting the same colored link.
//!
//! `V_m` is the Seifert matrix of the positive `(2, 2m+1)` torus knot on its
//! genus-`m` fiber: `-1` on the diagonal, `1` on the superdiagonal. The
//! closure of `σ_1^{2m+1} σ_2^2` with colors `(1, 1, 2)` is that knot summed
//! with a positive Hopf link; its C-complex is the fiber of the knot clasped
//! once with a disk, so every curve lies on the color-1 surface.

use braidcore::{ColoredBraidWord, Coloring};
use nalgebra::DMatrix;

use crate::system::{SeifertMeta, SeifertSystem};

#[derive(Clone, Debug)]
pub struct LibraryEntry {
    pub system: SeifertSystem,
    pub braid: ColoredBraidWord,
}

pub fn torus_knot_matrix(m: usize) -> DMatrix<i64> {
    let g = 2 * m;
    DMatrix::from_fn(g, g, |i, j| {
        if i == j {
            -1
        } else if j == i + 1 {
            1
        } else {
            0
        }
    })
}

fn meta(name: &str, components: usize, linking: Vec<Vec<i64>>) -> SeifertMeta {
    SeifertMeta { name: name.into(), components: Some(components), linking: Some(linking) }
}

fn braid(colors: &[usize], letters: Vec<i32>) -> ColoredBraidWord {
    let mu = *colors.iter().max().unwrap();
    ColoredBraidWord::new(colors.len(), Coloring::new(colors.to_vec(), mu).unwrap(), letters).unwrap()
}

fn block_sum(a: &DMatrix<i64>, b: &DMatrix<i64>) -> DMatrix<i64> {
    let mut out = DMatrix::zeros(a.nrows() + b.nrows(), a.ncols() + b.ncols());
    out.view_mut((0, 0), a.shape()).copy_from(a);
    out.view_mut(a.shape(), b.shape()).copy_from(b);
    out
}

pub fn unknot() -> LibraryEntry {
    let system = SeifertSystem::supported_on(1, 0, DMatrix::zeros(0, 0), meta("unknot", 1, vec![vec![0]])).unwrap();
    LibraryEntry { system, braid: braid(&[1], vec![]) }
}

/// Two disks clasped once.
pub fn hopf() -> LibraryEntry {
    let system =
        SeifertSystem::supported_on(2, 0, DMatrix::zeros(0, 0), meta("hopf", 2, vec![vec![0, 1], vec![1, 0]])).unwrap();
    LibraryEntry { system, braid: braid(&[1, 2], vec![1, 1]) }
}

/// The positive Hopf band.
pub fn hopf_one_variable() -> LibraryEntry {
    let a = DMatrix::from_element(1, 1, -1);
    let system = SeifertSystem::supported_on(1, 0, a, meta("hopf-1", 2, vec![vec![0, 1], vec![1, 0]])).unwrap();
    LibraryEntry { system, braid: braid(&[1, 1], vec![1, 1]) }
}

pub fn torus_knot(m: usize) -> LibraryEntry {
    let name = if m == 1 { "trefoil".to_string() } else { format!("torus-2-{}", 2 * m + 1) };
    let system = SeifertSystem::supported_on(1, 0, torus_knot_matrix(m), meta(&name, 1, vec![vec![0]])).unwrap();
    LibraryEntry { system, braid: braid(&[1, 1], vec![1; 2 * m + 1]) }
}

pub fn trefoil() -> LibraryEntry {
    torus_knot(1)
}

fn torus_hopf_letters(m: usize) -> Vec<i32> {
    let mut letters = vec![1; 2 * m + 1];
    letters.extend([2, 2]);
    letters
}

/// `σ_1^{2m+1} σ_2^2` with colors `(1, 1, 2)`.
pub fn torus_hopf_sum(m: usize) -> LibraryEntry {
    let name = format!("torus-hopf-{m}");
    let system =
        SeifertSystem::supported_on(2, 0, torus_knot_matrix(m), meta(&name, 2, vec![vec![0, 1], vec![1, 0]])).unwrap();
    LibraryEntry { system, braid: braid(&[1, 1, 2], torus_hopf_letters(m)) }
}

/// The same link with one color: the fiber plumbed with a Hopf band.
pub fn torus_hopf_sum_one_variable(m: usize) -> LibraryEntry {
    let name = format!("torus-hopf-{m}-1");
    let a = block_sum(&torus_knot_matrix(m), &DMatrix::from_element(1, 1, -1));
    let system = SeifertSystem::supported_on(1, 0, a, meta(&name, 2, vec![vec![0, 1], vec![1, 0]])).unwrap();
    LibraryEntry { system, braid: braid(&[1, 1, 1], torus_hopf_letters(m)) }
}

pub fn all() -> Vec<LibraryEntry> {
    let mut out = vec![unknot(), hopf(), hopf_one_variable(), trefoil(), torus_knot(2)];
    for m in 1..=2 {
        out.push(torus_hopf_sum(m));
        out.push(torus_hopf_sum_one_variable(m));
    }
    out
}

pub fn lookup(name: &str) -> Option<LibraryEntry> {
    all().into_iter().find(|e| e.system.meta.name == name)
}
