//! Text printed by `--seed-docs`.

pub const SEED_DOCS: &str = "\
springer: map of subcommands to the mathematics they compute

rst list <shape>
    Every row-strict tableau of the shape, in lexicographic order of the
    row-reading word. These index the affine cells of the Springer fiber.

tableau info <tableau>
    The I/J/K splitting of [n-1] read off from where i+1 sits relative to i,
    the blocks (maximal runs of consecutive labels in a row), the maximal
    divisor d = gcd of block lengths, Springer inversions (|sigma| is the cell
    dimension), Springer pairs (always dim of the Springer fiber many),
    the permutation w_sigma and the toric frame of the cell.

tableau quotient <tableau> <d>
    Keep the entries divisible by d in each row and divide them by d.
    Pairs outside the inversions correspond under (i,j) -> (di,dj).

poincare springer <shape>
    Sum of t^|sigma| over row-strict tableaux.
poincare extended <shape>
    Sum of d_sigma t^|sigma|; equivalently sum over d | shape of
    totient(d) t^D P(shape/d), with D = dim(shape) - dim(shape/d).
poincare isotypic <shape> [--char i]
    The chi_i-isotypic part under the centre Z/n: each cell contributes to
    the characters that are multiples of n/d_sigma. Computed cell by cell
    and as t^D P(shape/d) with d = n/gcd(n,i); the two must agree.
poincare lusztig <shape> [--char i]
    Stalk at the nilpotent of the Lusztig sheaf for chi_i, as a shift of
    P(shape/d) by dim of the nilcone plus D; zero unless d divides the shape.

cells <shape>
    Orbifold cells (sigma, r), 0 <= r < d_sigma, with their dimensions;
    the central generator sends r to r+1.

toric dstar|phi|characters|invariants  (--n N --j LIST --k LIST | --tableau T)
    Toric chart of a cell. dstar is gcd(I, K, n), the number of components
    of the intersection with the regular semisimple fiber. phi indexes the
    component of a residue tuple --c. characters lists the characters of Z/n
    appearing on the components. invariants tests a monomial --b for
    invariance under the stabilizer of the J coordinates and splits it into
    an H-invariant monomial plus a vanishing remainder.
toric vtable --n N
    Exponent vectors of the fundamental weight functions v_k in the
    z coordinates, reduced mod n.

verify all [--n-max N]
    Exhaustive checks of every identity above against first-principles
    enumeration: tableau identities and polynomial identities up to N,
    group-theoretic suites up to min(N, 6). Exit code 1 on any failure.
";
