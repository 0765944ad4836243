#include "expwin/window_spec.hpp"

#include <charconv>
#include <map>

namespace expwin {

namespace {

[[noreturn]] void parse_fail(std::string_view message, std::string_view token) {
  throw WindowError(ErrorKind::ParseError, std::string(message) + " '" + std::string(token) + "'");
}

double parse_number(std::string_view token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) parse_fail("malformed number", token);
  return value;
}

// "k1=v1,k2=v2" -> map; rejects empty and duplicate keys.
std::map<std::string, double, std::less<>> parse_params(std::string_view text) {
  std::map<std::string, double, std::less<>> params;
  if (text.empty()) parse_fail("empty parameter list in", text);
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) parse_fail("expected key=value, got", item);
    const std::string key(item.substr(0, eq));
    if (params.count(key)) parse_fail("duplicate parameter", key);
    params.emplace(key, parse_number(item.substr(eq + 1)));
    start = comma + 1;
  }
  return params;
}

CatalogWindow parse_catalog(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view id_token = text.substr(0, colon);
  const auto id = catalog_id_from_name(id_token);
  if (!id) parse_fail("unknown window id", id_token);

  const CatalogInfo& info = catalog_info(*id);
  CatalogWindow window = make_catalog(*id);
  if (colon != std::string_view::npos) {
    for (const auto& [key, value] : parse_params(text.substr(colon + 1))) {
      if (info.param_name.empty() || key != info.param_name) {
        parse_fail(std::string("unknown parameter for ") + std::string(info.name) + ":", key);
      }
      window.param = value;
    }
  }
  validate(window);
  return window;
}

double take(std::map<std::string, double, std::less<>>& params, std::string_view key,
            std::string_view context) {
  const auto it = params.find(key);
  if (it == params.end()) parse_fail(std::string("missing parameter '") + std::string(key) + "' in", context);
  const double v = it->second;
  params.erase(it);
  return v;
}

KernelSpec parse_kernel(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (kind == "win") {
    if (rest.empty()) parse_fail("missing catalog window after", text);
    return WrappedWindowKernel{parse_catalog(rest)};
  }
  if (kind != "poly" && kind != "sine") parse_fail("unknown kernel kind", kind);

  auto params = parse_params(rest);
  KernelSpec spec;
  if (kind == "poly") {
    const double m = take(params, "m", text);
    const double n = take(params, "n", text);
    spec = PolynomialKernel{m, n};
  } else {
    spec = ScaledSineKernel{take(params, "c", text)};
  }
  if (!params.empty()) parse_fail("unknown parameter", params.begin()->first);
  return spec;
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

WindowDef parse_window_spec(std::string_view text) {
  if (text.empty()) parse_fail("empty window spec", text);
  WindowDef def;
  if (text.starts_with("exp:")) {
    def = ExpKernelWindow{parse_kernel(text.substr(4))};
  } else if (text == "exp") {
    parse_fail("missing kernel after", text);
  } else {
    def = parse_catalog(text);
  }
  validate(def);
  return def;
}

std::string format_window_spec(const CatalogWindow& window) {
  const CatalogInfo& info = catalog_info(window.id);
  std::string out(info.name);
  if (!info.param_name.empty()) {
    out += ':';
    out += info.param_name;
    out += '=';
    out += format_number(window.param);
  }
  return out;
}

std::string format_window_spec(const WindowDef& def) {
  if (const auto* cat = std::get_if<CatalogWindow>(&def)) return format_window_spec(*cat);
  const KernelSpec& kernel = std::get<ExpKernelWindow>(def).kernel;
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PolynomialKernel>) {
          return "exp:poly:m=" + format_number(k.m) + ",n=" + format_number(k.n);
        } else if constexpr (std::is_same_v<K, ScaledSineKernel>) {
          return "exp:sine:c=" + format_number(k.c);
        } else {
          return "exp:win:" + format_window_spec(k.window);
        }
      },
      kernel);
}

}  // namespace expwin
