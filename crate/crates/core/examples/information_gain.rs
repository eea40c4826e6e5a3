//! Variance drop from splitting a column by a grouping, in both the plain
//! and the size-weighted form.
//!
//! cargo run --example information_gain

use category_trees::{information_gain, variance, Result};

pub fn run() -> Result<(f64, f64)> {
    // Monthly fire counts for three made-up sectors.
    let sectors = vec![
        vec![8.0, 8.0, 9.0, 8.0],
        vec![3.0, 2.0, 3.0],
        vec![12.0, 11.0],
    ];
    let all: Vec<f64> = sectors.iter().flatten().copied().collect();
    println!("variance of the whole column: {:.4}", variance(&all)?);
    for (i, s) in sectors.iter().enumerate() {
        println!("sector {i}: variance {:.4}", variance(s)?);
    }
    let plain = information_gain(&all, &sectors, false)?;
    let weighted = information_gain(&all, &sectors, true)?;
    println!("gain: {plain:.4}  weighted gain: {weighted:.4}");
    Ok((plain, weighted))
}

fn main() -> Result<()> {
    run().map(|_| ())
}
