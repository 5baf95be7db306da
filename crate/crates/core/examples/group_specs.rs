//! The group description language used on the command line.

use autotower::cli::parse_spec;
use autotower::Result;

fn main() -> Result<()> {
    for text in [
        "sym 4",
        "product (dihedral 5) (alt 5)",
        "wreath_tower 2",
        "pgammal2 2 3 3",
        "subgroup (sym 4) gens [(0 1 2 3), (0 2)]",
        "quaternion",
    ] {
        let spec = parse_spec(text)?;
        let g = spec.build()?;
        println!("{:42} → {:40} order {:5} degree {}", text, spec.to_string(), g.order(), g.degree());
    }
    for bad in ["alt 2", "cyclic", "product (sym 3)", "frob 3", "sym 3 extra", "subgroup (sym 3) gens [(0 4)]"] {
        match parse_spec(bad).and_then(|s| s.build()) {
            Ok(g) => println!("{:30} unexpectedly gave order {}", bad, g.order()),
            Err(e) => println!("{:30} {}", bad, e),
        }
    }
    Ok(())
}
