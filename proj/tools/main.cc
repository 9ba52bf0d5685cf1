/*
 * Copyright 2026 The SCP-ABE Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// scpabe: file-based workflow for the attribute authority (setup, keygen),
// the distributor (package), consumers (unpackage) and delegating friends
// (delegate), plus inspection and benchmarking.
//
// Exit codes: 0 ok, 1 I/O, 2 validation, 3 crypto/format/authentication,
// 4 no accessible layer.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scpabe/access_tree.h"
#include "scpabe/benchmark_fixtures.h"
#include "scpabe/codec.h"
#include "scpabe/cost_probe.h"
#include "scpabe/errors.h"
#include "scpabe/file_io.h"
#include "scpabe/media_vault.h"
#include "scpabe/policy_document.h"
#include "scpabe/scheme.h"
#include "scpabe/serialization.h"
#include "scpabe/transparent_group.h"
#include "scpabe/type_a_group.h"

namespace fs = std::filesystem;
using namespace scpabe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCrypto = 3;
constexpr int kExitNoLayer = 4;

constexpr const char* kSeedEnv = "SCPABE_TEST_SEED";

struct Options {
  std::string pk, mk, sk, out, policy, dims, attrs, in;
  std::string provider = "type-a";
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::size_t min = 10, max = 100, step = 10;
  int reps = 3;
};

template <class F>
int with_group(ProviderId id, F&& f) {
  if (id == ProviderId::kTransparent) {
    const TransparentGroup grp;
    return f(grp);
  }
  const TypeAGroup grp;
  return f(grp);
}

ProviderId provider_of(const fs::path& file, Role role) {
  return envelope_descriptor(parse_json(read_file(file)), role).provider;
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw ValidationError(std::string(kSeedEnv) + " must be an unsigned integer");
  }
  return v;
}

// Seeding is a test facility: the flag is refused outright for the
// production provider, and the environment variable is ignored there.
std::unique_ptr<RandomSource> make_rng(const Options& opt, ProviderId provider,
                                       std::string_view command) {
  std::optional<std::uint64_t> seed = opt.seed;
  if (seed && provider != ProviderId::kTransparent) {
    throw ValidationError("--seed is a test facility and is refused with the type-a provider");
  }
  if (!seed) {
    if (const char* env = std::getenv(kSeedEnv); env != nullptr) {
      if (provider == ProviderId::kTransparent) {
        seed = parse_seed(env);
      } else {
        std::cerr << "warning: " << kSeedEnv << " ignored for the type-a provider\n";
      }
    }
  }
  if (!seed) return std::make_unique<SystemRandom>();
  // Separate streams per command so pipeline steps do not share randomness.
  const auto digest = sha256(std::string(command) + ":" + std::to_string(*seed));
  std::uint64_t mixed = 0;
  for (int i = 0; i < 8; ++i) mixed = (mixed << 8) | digest[i];
  return std::make_unique<SeededRandom>(mixed);
}

AttributeSet parse_attrs(const std::string& text) {
  AttributeSet out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ValidationError("empty attribute in --attrs");
    out.insert(item.substr(b, e - b + 1));
  }
  if (text.back() == ',') throw ValidationError("empty attribute in --attrs");
  return out;
}

// Policy documents are user input: malformed ones are validation errors.
PolicyLattice load_policy(const std::string& path) {
  try {
    return load_policy_document(path);
  } catch (const FormatError& e) {
    throw ValidationError(e.what());
  }
}

int run_setup(const Options& opt) {
  const ProviderId id = parse_provider(opt.provider);
  auto rng = make_rng(opt, id, "setup");
  return with_group(id, [&](const auto& grp) {
    const Scheme scheme(grp);
    const auto keys = scheme.setup(*rng);
    write_file_atomic(opt.pk, dump_json(to_json(grp, keys.pk)));
    write_file_atomic(opt.mk, dump_json(to_json(grp, keys.mk)));
    return kExitOk;
  });
}

int run_keygen(const Options& opt) {
  if (opt.dims.empty() == opt.policy.empty()) {
    throw ValidationError("keygen needs exactly one of --dims or --policy");
  }
  const Dimensions dims =
      opt.dims.empty() ? load_policy(opt.policy).dims() : Dimensions::parse(opt.dims);
  const AttributeSet attrs = parse_attrs(opt.attrs);
  const ProviderId id = provider_of(opt.pk, Role::kPublicKey);
  auto rng = make_rng(opt, id, "keygen");
  return with_group(id, [&](const auto& grp) {
    const Scheme scheme(grp);
    const auto pk = public_key_from_json(grp, parse_json(read_file(opt.pk)));
    const auto mk = master_key_from_json(grp, parse_json(read_file(opt.mk)));
    write_file_atomic(opt.out, dump_json(to_json(grp, scheme.keygen(pk, mk, attrs, dims, *rng))));
    return kExitOk;
  });
}

int run_delegate(const Options& opt) {
  const AttributeSet attrs = parse_attrs(opt.attrs);
  const ProviderId id = provider_of(opt.pk, Role::kPublicKey);
  auto rng = make_rng(opt, id, "delegate");
  return with_group(id, [&](const auto& grp) {
    const Scheme scheme(grp);
    const auto pk = public_key_from_json(grp, parse_json(read_file(opt.pk)));
    const auto uk = user_key_from_json(grp, parse_json(read_file(opt.sk)));
    write_file_atomic(opt.out, dump_json(to_json(grp, scheme.delegate(pk, uk, attrs, *rng))));
    return kExitOk;
  });
}

int run_package(const Options& opt) {
  const PolicyLattice lat = load_policy(opt.policy);
  std::map<LayerCoord, Bytes> payloads;
  for (const auto& c : lat.dims().coords()) {
    const fs::path file = fs::path(opt.in) / layer_file_name(c);
    if (!fs::exists(file)) {
      throw ValidationError("missing layer file " + file.string());
    }
    const std::string raw = read_file(file);
    payloads.emplace(c, Bytes(raw.begin(), raw.end()));
  }
  const ProviderId id = provider_of(opt.pk, Role::kPublicKey);
  auto rng = make_rng(opt, id, "package");
  return with_group(id, [&](const auto& grp) {
    const Scheme scheme(grp);
    const auto pk = public_key_from_json(grp, parse_json(read_file(opt.pk)));
    write_package(opt.out, grp, package(scheme, pk, lat, payloads, *rng));
    return kExitOk;
  });
}

int run_unpackage(const Options& opt) {
  const ProviderId id = package_descriptor(opt.in).provider;
  return with_group(id, [&](const auto& grp) {
    const Scheme scheme(grp);
    const auto pk = public_key_from_json(grp, parse_json(read_file(opt.pk)));
    const auto uk = user_key_from_json(grp, parse_json(read_file(opt.sk)));
    const auto pkg = read_package(opt.in, grp);
    const UnpackResult result = unpackage(scheme, pk, uk, pkg);
    if (!result.layers.empty()) {
      std::error_code ec;
      fs::create_directories(opt.out, ec);
      if (ec) throw IoError("cannot create " + opt.out + ": " + ec.message());
    }
    for (const auto& [c, bytes] : result.layers) {
      write_file_atomic(fs::path(opt.out) / layer_file_name(c), bytes);
      std::cout << layer_file_name(c) << "\n";
    }
    if (!result.tampered.empty()) {
      for (const auto& c : result.tampered) {
        std::cerr << "error: layer (" << c.to_string() << ") failed authentication\n";
      }
      return kExitCrypto;
    }
    if (result.layers.empty()) {
      std::cerr << "no layer is accessible with this key\n";
      return kExitNoLayer;
    }
    return kExitOk;
  });
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(opt.out, text);
  }
}

int run_tree(const Options& opt) {
  const AccessTree tree = build_tree(load_policy(opt.policy));
  if (opt.format == "text") {
    emit(opt, render_text(tree));
  } else if (opt.format == "dot") {
    emit(opt, render_dot(tree));
  } else {
    throw ValidationError("--format must be text or dot");
  }
  return kExitOk;
}

int run_bench(const Options& opt) {
  if (opt.step == 0 || opt.min > opt.max || opt.reps < 1) {
    throw ValidationError("bench needs --min <= --max, --step > 0 and --reps >= 1");
  }
  const Dimensions dims = Dimensions::parse(opt.dims.empty() ? "1x2" : opt.dims);
  const ProviderId id = parse_provider(opt.provider);
  auto rng = make_rng(opt, id, "bench");
  return with_group(id, [&](const auto& grp) {
    const Scheme scheme(grp);
    const auto keys = scheme.setup(*rng);
    std::ostringstream csv;
    csv << "leaves,encrypt_ms,keygen_ms,decrypt_ms,scpabe_leaves,naive_leaves\n";
    std::vector<std::size_t> targets;
    std::vector<PolicyLattice> lattices;
    for (std::size_t n = opt.min; n <= opt.max; n += opt.step) {
      targets.push_back(n);
      lattices.push_back(fixture_with_leaves(dims, n));
    }
    const auto samples = cost_curve(scheme, keys, lattices, opt.reps, *rng);
    std::vector<double> xs, enc, kg, dec;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const CostSample& s = samples[i];
      const std::size_t n = targets[i];
      csv << n << ',' << s.encrypt_ms << ',' << s.keygen_ms << ',' << s.decrypt_ms
          << ',' << s.leaves << ',' << s.naive_leaves << '\n';
      xs.push_back(static_cast<double>(s.leaves));
      enc.push_back(s.encrypt_ms);
      kg.push_back(s.keygen_ms);
      dec.push_back(s.decrypt_ms);
    }
    emit(opt, csv.str());
    if (xs.size() >= 2 && xs.front() != xs.back()) {
      std::cerr << "r2 encrypt=" << fit_line(xs, enc).r2
                << " keygen=" << fit_line(xs, kg).r2
                << " decrypt=" << fit_line(xs, dec).r2 << "\n";
    }
    return kExitOk;
  });
}

int run_policy_validate(const Options& opt) {
  const PolicyLattice lat = load_policy(opt.policy);
  std::cout << "ok: " << lat.dims().to_string() << " lattice, "
            << lat.dims().layer_count() << " layers\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scalable multi-message CP-ABE and layered media packaging"};
  app.require_subcommand(1);
  Options opt;

  auto seed_opt = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed,
                     "Deterministic randomness (test only; transparent provider)");
  };

  CLI::App* setup = app.add_subcommand("setup", "Generate public and master keys");
  setup->add_option("--pk", opt.pk, "Public key output")->required();
  setup->add_option("--mk", opt.mk, "Master key output")->required();
  setup->add_option("--provider", opt.provider, "type-a (default) or transparent");
  seed_opt(setup);

  CLI::App* keygen = app.add_subcommand("keygen", "Issue a user key");
  keygen->add_option("--pk", opt.pk, "Public key")->required();
  keygen->add_option("--mk", opt.mk, "Master key")->required();
  keygen->add_option("--attrs", opt.attrs, "Comma-separated attributes")->required();
  keygen->add_option("--dims", opt.dims, "Layer grid, e.g. 2x3");
  keygen->add_option("--policy", opt.policy, "Policy document supplying the grid");
  keygen->add_option("--out", opt.out, "User key output")->required();
  seed_opt(keygen);

  CLI::App* delegate = app.add_subcommand("delegate", "Derive a key for an attribute subset");
  delegate->add_option("--pk", opt.pk, "Public key")->required();
  delegate->add_option("--sk", opt.sk, "User key to delegate from")->required();
  delegate->add_option("--attrs", opt.attrs, "Comma-separated subset")->required();
  delegate->add_option("--out", opt.out, "Delegated key output")->required();
  seed_opt(delegate);

  CLI::App* pack = app.add_subcommand("package", "Encrypt layer files into a package");
  pack->add_option("--pk", opt.pk, "Public key")->required();
  pack->add_option("--policy", opt.policy, "Policy document")->required();
  pack->add_option("--in", opt.in, "Directory of layer-<c1>_<c2>... files")->required();
  pack->add_option("--out", opt.out, "Package directory")->required();
  seed_opt(pack);

  CLI::App* unpack = app.add_subcommand("unpackage", "Extract the layers a key can open");
  unpack->add_option("--pk", opt.pk, "Public key")->required();
  unpack->add_option("--sk", opt.sk, "User key")->required();
  unpack->add_option("--in", opt.in, "Package directory")->required();
  unpack->add_option("--out", opt.out, "Directory for extracted layers")->required();

  CLI::App* tree = app.add_subcommand("tree", "Render the access tree of a policy");
  tree->add_option("--policy", opt.policy, "Policy document")->required();
  tree->add_option("--format", opt.format, "text (default) or dot");
  tree->add_option("--out", opt.out, "Output file (default stdout)");

  CLI::App* bench = app.add_subcommand("bench", "Cost versus leaf count, as CSV");
  bench->add_option("--provider", opt.provider, "type-a (default) or transparent");
  bench->add_option("--dims", opt.dims, "Layer grid of the fixtures (default 1x2)");
  bench->add_option("--min", opt.min, "Smallest leaf count");
  bench->add_option("--max", opt.max, "Largest leaf count");
  bench->add_option("--step", opt.step, "Leaf count increment");
  bench->add_option("--reps", opt.reps, "Interleaved rounds per point (median CPU time)");
  bench->add_option("--out", opt.out, "CSV output (default stdout)");

  CLI::App* policy = app.add_subcommand("policy", "Policy document tools");
  policy->require_subcommand(1);
  CLI::App* validate = policy->add_subcommand("validate", "Check a policy document");
  validate->add_option("--policy", opt.policy, "Policy document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*setup) return run_setup(opt);
    if (*keygen) return run_keygen(opt);
    if (*delegate) return run_delegate(opt);
    if (*pack) return run_package(opt);
    if (*unpack) return run_unpackage(opt);
    if (*tree) return run_tree(opt);
    if (*bench) return run_bench(opt);
    if (*validate) return run_policy_validate(opt);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCrypto;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitValidation;
}
