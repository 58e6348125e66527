#pragma once

#include "qorbit/phi.hpp"
#include "qorbit/submodule.hpp"

namespace qorbit {

/// A fully loaded algebra/module/twist package: generator set with its
/// coproduct data, module algebra, base action, twist map, and the relation
/// set with its coideal certificate.  Loaders verify the certificate and
/// phi(R) = 0 before handing the instance out.
struct Instance {
    std::string name;
    ParameterContext ctx;
    GenSetPtr algebra;
    CellPtr cell;
    ActionPtr action;
    PhiPtr phi;
    std::vector<FreeElement> relations;
    ClosurePair closure;  // what the certificate was solved against
    CoidealCertificate certificate;

    TwistedAction twisted() const { return TwistedAction(phi); }

    // pins formal parameters to powers of the base variable
    Instance substituted(const std::map<std::string, int>& v_powers) const;
};

GenSetPtr substitute_generators(const GenSetPtr& g, const Substitution& sub);
FreeElement substitute_element(const FreeElement& x, const GenSetPtr& target,
                               const Substitution& sub);

} // namespace qorbit
