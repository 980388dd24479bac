#include "pvalab/lambda.hpp"

namespace pvalab {

namespace {
BiValue lam(int axis) {
    BiValue v{DiffPoly(Rat(1))};
    return v.mul_var(axis);
}
BiValue lam_times(int axis, const DiffPoly& p) {
    BiValue v{p};
    return v.mul_var(axis);
}
} // namespace

BracketStructure structure_p1() {
    BracketStructure b;
    b(0, 0) = lam(0);
    b(1, 1) = lam(1);
    return b;
}

BracketStructure structure_p2() {
    BracketStructure b;
    b(0, 1) = lam(0);
    b(1, 0) = lam(0);
    b(1, 1) = lam(1);
    return b;
}

BracketStructure structure_plp() {
    const DiffPoly p = DiffPoly::jet(0, 0, 0);
    const DiffPoly q = DiffPoly::jet(1, 0, 0);
    BracketStructure b;
    b(0, 0) = lam_times(0, p * Rat(2)) + BiValue{DiffPoly::jet(0, 1, 0)};
    b(0, 1) = lam_times(0, q) + lam_times(1, p) + BiValue{DiffPoly::jet(1, 1, 0)};
    b(1, 0) = lam_times(0, q) + lam_times(1, p) + BiValue{DiffPoly::jet(0, 0, 1)};
    b(1, 1) = lam_times(1, q * Rat(2)) + BiValue{DiffPoly::jet(1, 0, 1)};
    return b;
}

} // namespace pvalab
