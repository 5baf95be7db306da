//! The verification suites, each producing a report with named checks.

use autotower::constructions::dihedral;
use autotower::towers::{
    verify_alt_incompatibility, verify_product_tower, verify_psl_correspondence,
    verify_remark_incompatibility, verify_wreath_tower, SuiteOptions,
};
use autotower::Result;

fn main() -> Result<()> {
    let o = SuiteOptions::default();
    let reports = vec![
        verify_wreath_tower(3)?,
        verify_psl_correspondence(2, 3, 3, &o)?,
        verify_psl_correspondence(3, 2, 1, &o)?,
        verify_alt_incompatibility(3, 4, &o)?,
        verify_remark_incompatibility(4, 0, 2, &o)?,
        verify_product_tower(&dihedral(5)?, "dihedral 5", 5, &o)?,
    ];
    for r in &reports {
        print!("{}", r.render_text());
    }
    let last = reports.last().expect("at least one report");
    println!("{}", serde_json::to_string_pretty(last).expect("reports serialize"));
    Ok(())
}
