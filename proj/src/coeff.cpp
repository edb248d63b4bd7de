#include "hecke/coeff.hpp"

namespace hecke {

CoeffMode coeff_mode_parse(std::string_view text) {
    if (text == "v" || text == "symbolic") return CoeffMode::symbolic();
    return CoeffMode::numeric(rat_parse(text));
}

}  // namespace hecke
