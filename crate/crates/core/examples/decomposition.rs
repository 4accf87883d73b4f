//! Overlapping layouts in 1D and 2D and the contraction factor they imply.

use schwarz_etd::geometry::{decompose_1d, decompose_2d, make_grid_1d, OverlapConvention};
use schwarz_etd::schwarz::theoretical_rate;

fn main() -> schwarz_etd::Result<()> {
    let grid = make_grid_1d(2.0, 255)?;
    println!("h = {}", grid.h);
    for cells in [1, 2, 4, 8] {
        let d = decompose_1d(&grid, 2, cells)?;
        let pair = &d.interfaces[0];
        println!(
            "δ = {cells}h: subdomains {:?} and {:?}, α = {:.5}, β = {:.5}, κ = {:.4}",
            d.range(0),
            d.range(1),
            pair.alpha,
            pair.beta,
            theoretical_rate(pair.alpha, pair.beta)?
        );
    }

    let d = decompose_1d(&grid, 4, 3)?;
    for i in 0..4 {
        println!("4 subdomains, δ = 3h: part {i} covers nodes {:?}", d.range(i));
    }

    for convention in [OverlapConvention::Half, OverlapConvention::Full] {
        let d = decompose_2d(127, 127, 3, 3, 9, convention)?;
        let b = &d.layout.boxes[4];
        println!(
            "3x3, 9 cells, {convention}: centre box {:?}..{:?}, core {:?}..{:?}, {} interface reads",
            b.lo,
            b.hi,
            b.core_lo,
            b.core_hi,
            b.reads.len()
        );
    }

    match decompose_1d(&grid, 2, 0) {
        Err(e) => println!("zero overlap: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
