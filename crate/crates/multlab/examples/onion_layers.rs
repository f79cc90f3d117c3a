//! Onion decomposition: iterated convex-hull peeling.
//!
//! Run with: cargo run --example onion_layers

use multlab::constructions::{grid_section, random_rational_set};
use multlab::hull::{convex_hull, is_convex_position, onion_layers};
use multlab::point::AnySet;

fn main() -> multlab::Result<()> {
    // Boundary membership includes collinear points: the outer layer of
    // the 5x5 grid is the full 16-point ring, not just the 4 corners.
    let AnySet::Exact(grid) = grid_section(5, 5)?.set else {
        unreachable!()
    };
    let layers = onion_layers(&grid);
    println!("5x5 grid layer sizes: {:?}", layers.layer_sizes());
    for (i, layer) in layers.layers.iter().enumerate() {
        println!("  L{}: {:?}", i + 1, layer);
    }

    let hull = convex_hull(&grid);
    println!("outer hull walk (counterclockwise): {hull:?}");

    // A random rational set peels into O(n / log n)-ish many layers.
    let random = random_rational_set(60, 7)?;
    let layers = onion_layers(&random);
    println!(
        "random 60-point set: {} layers, sizes {:?}",
        layers.layers.len(),
        layers.layer_sizes()
    );
    println!(
        "in convex position: {}",
        is_convex_position(&random)
    );
    Ok(())
}
