#pragma once

// Named evaluable k-linear maps between carriers. Linearity is a contract
// checked by sampling (laws.hpp), not by construction.

#include <functional>
#include <string>
#include <utility>

#include "ftczin/element.hpp"

namespace ftczin {

struct LinearOperator {
    std::string name;
    CarrierDescriptor domain;
    CarrierDescriptor codomain;
    std::function<CarrierElement(const CarrierElement&)> map;

    CarrierElement operator()(const CarrierElement& x) const { return map(x); }
};

inline LinearOperator identityOperator(const CarrierDescriptor& desc, std::string name = "id") {
    return {std::move(name), desc, desc, [](const CarrierElement& x) { return x; }};
}

inline LinearOperator zeroOperator(const CarrierDescriptor& dom, const CarrierDescriptor& cod,
                                   std::string name = "0") {
    return {std::move(name), dom, cod, [cod](const CarrierElement&) { return zeroOf(cod); }};
}

inline LinearOperator composeOps(const LinearOperator& outer, const LinearOperator& inner) {
    return {outer.name + "." + inner.name, inner.domain, outer.codomain,
            [o = outer.map, i = inner.map](const CarrierElement& x) { return o(i(x)); }};
}

inline LinearOperator sumOps(const LinearOperator& f, const LinearOperator& g) {
    return {f.name + "+" + g.name, f.domain, f.codomain,
            [fm = f.map, gm = g.map](const CarrierElement& x) { return add(fm(x), gm(x)); }};
}

}  // namespace ftczin
