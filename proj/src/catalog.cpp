#include "expwin/catalog.hpp"

#include <cmath>
#include <sstream>

namespace expwin {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidKernel: return "invalid-kernel";
    case ErrorKind::BadParameter: return "bad-parameter";
    case ErrorKind::NoNullsFound: return "no-nulls-found";
    case ErrorKind::InsufficientLobes: return "insufficient-lobes";
    case ErrorKind::NotConverged: return "not-converged";
    case ErrorKind::ParseError: return "parse-error";
  }
  return "unknown";
}

namespace {

constexpr double kKaiserDefault = 8.0 / std::numbers::pi;

// Indexed by CatalogId.
constexpr std::array<CatalogInfo, 13> kCatalog = {{
    {"rectangular", "", 0.0, "1", false, true},
    {"triangular", "", 0.0, "1-2|t-1/2|", true, true},
    {"welch", "", 0.0, "4t(1-t)", true, true},
    {"sine", "", 0.0, "sin(pi t)", true, true},
    {"hann", "", 0.0, "0.5-0.5cos(2 pi t)", true, true},
    {"hamming", "", 0.0, "0.54-0.46cos(2 pi t)", false, true},
    {"gaussian", "sigma", 0.5, "exp(-((t-1/2)/sigma)^2/2)", false, true},
    {"cauchy_lorentz", "gamma", 0.5, "gamma^2/((t-1/2)^2+gamma^2)", false, true},
    {"poisson", "tau", 0.5, "exp(-|t-1/2|/tau)", false, true},
    {"kaiser", "alpha", kKaiserDefault, "I0(pi alpha sqrt(1-(2t-1)^2))/I0(pi alpha)", false, true},
    {"tukey", "alpha", 0.5, "cosine taper over alpha/2 at each end, 1 between", true, true},
    {"planck_taper", "epsilon", 0.25, "[1+exp(eps/t+eps/(t-eps))]^-1 taper over eps at each end, 1 between",
     true, true},
    {"avci_exp", "alpha", 1.0, "exp(alpha sqrt(1-4(t-1/2)^2))/exp(alpha)", false, false},
}};

[[noreturn]] void bad_param(const CatalogWindow& w, const char* range) {
  const CatalogInfo& info = catalog_info(w.id);
  std::ostringstream os;
  os << info.name << ": " << info.param_name << "=" << w.param << " out of range, expected "
     << range;
  throw WindowError(ErrorKind::BadParameter, os.str());
}

}  // namespace

const CatalogInfo& catalog_info(CatalogId id) { return kCatalog[static_cast<std::size_t>(id)]; }

std::optional<CatalogId> catalog_id_from_name(std::string_view name) {
  for (CatalogId id : kAllCatalogIds) {
    if (catalog_info(id).name == name) return id;
  }
  return std::nullopt;
}

CatalogWindow make_catalog(CatalogId id) { return {id, catalog_info(id).default_param}; }

CatalogWindow make_catalog(CatalogId id, double param) {
  CatalogWindow w{id, catalog_info(id).param_name.empty() ? 0.0 : param};
  validate(w);
  return w;
}

void validate(const CatalogWindow& w) {
  const double p = w.param;
  switch (w.id) {
    case CatalogId::Gaussian:
    case CatalogId::CauchyLorentz:
    case CatalogId::Poisson:
    case CatalogId::Kaiser:
    case CatalogId::AvciExp:
      if (!(p > 0.0) || !std::isfinite(p)) bad_param(w, "> 0");
      break;
    case CatalogId::Tukey:
      if (!(p > 0.0 && p < 1.0)) bad_param(w, "in (0,1)");
      break;
    case CatalogId::PlanckTaper:
      if (!(p > 0.0 && p < 0.5)) bad_param(w, "in (0,0.5)");
      break;
    default:
      break;
  }
}

}  // namespace expwin
