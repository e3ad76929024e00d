//! Smith normal form with its unimodular transforms, and an integer kernel.

use glasner::exact::{left_kernel_integer, smith_normal_form, IntMat};

fn main() {
    let m = IntMat::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("M =\n{m}");
    println!("D =\n{}", snf.diag);
    println!("invariant factors: {:?}", snf.invariant_factors());
    let rebuilt = snf.left.checked_mul(&snf.diag).unwrap().checked_mul(&snf.right).unwrap();
    assert_eq!(rebuilt, m);
    println!("L·D·R reproduces M");

    let k = IntMat::from_rows(&[[1, 2], [2, 4], [3, 6]]);
    for v in left_kernel_integer(&k) {
        let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
        println!("left kernel vector of [[1,2],[2,4],[3,6]]: ({})", shown.join(", "));
    }
}
