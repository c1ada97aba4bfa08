//! Converting rational contact surgeries and enumerating stabilizations.

use whitehead_census::surgery::{
    convert_contact_surgery, enumerate_stab_choices, overtwisted_guard, phi_family_choices, phi_family_link, Knot,
    SurgeryInstruction,
};
use whitehead_census::Slope;

fn main() -> whitehead_census::Result<()> {
    for (knot, c) in [(Knot::Trefoil, "3/2"), (Knot::Trefoil, "4"), (Knot::Trefoil, "1/3"), (Knot::Unknot, "-2/3")] {
        let instr = SurgeryInstruction::new(knot, c.parse()?);
        let link = convert_contact_surgery(&instr)?;
        println!("{knot:?} ({c}): {link}  [{} choices]", link.choice_count());
        for choice in enumerate_stab_choices(&link) {
            println!("    rot {:?}", choice.rots());
        }
    }

    for (knot, c) in [(Knot::Trefoil, "0"), (Knot::Unknot, "1/2")] {
        let instr = SurgeryInstruction::new(knot, c.parse()?);
        println!("{knot:?} ({c}): {}", overtwisted_guard(&instr).unwrap_or("tight candidate"));
    }

    let r: Slope = "5/2".parse()?;
    let link = phi_family_link(5, r)?;
    println!("Φ-family diagram for n = 5, r = {r}: {} choices", phi_family_choices(&link).len());
    Ok(())
}
