#ifndef HATLAS_ERRORS_HPP
#define HATLAS_ERRORS_HPP

#include <stdexcept>

namespace hatlas {

/* Each error names the precondition it guards, so call sites can catch
 * narrowly instead of matching message strings. */

// compose() was handed a candidate inner function with phi(0) != 0.
struct NonvanishingConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

// reciprocal() of a series whose constant term is zero.
struct DivisionByZeroConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

// |h'| vanished (below 1e-13) at a grid node; the truncation is not
// trustworthy near that node.
struct DegenerateDerivative : std::domain_error {
    using std::domain_error::domain_error;
};

// A prescribed dilatation reached modulus >= 1 on the validation grid.
struct NonContractiveDilatation : std::domain_error {
    using std::domain_error::domain_error;
};

// Omitted-disk data with r > |c|: the disk would contain the origin.
struct InvalidGeometry : std::domain_error {
    using std::domain_error::domain_error;
};

// Nearest boundary point a = 0 makes the F-class embedding undefined.
struct ZeroBoundaryPoint : std::domain_error {
    using std::domain_error::domain_error;
};

// Hyperbolic density of the unit disk requested at |z| >= 1.
struct OutsideDisk : std::domain_error {
    using std::domain_error::domain_error;
};

// Jacobian went negative at a quadrature node: the truncated map is not
// sense-preserving there. The offending node is in the message.
struct NegativeJacobianNode : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace hatlas

#endif
