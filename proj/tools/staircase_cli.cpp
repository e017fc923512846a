// Command-line front end: split a file into shares, reconstruct with
// minimal reads, inspect and rethreshold share files, print access
// plans, and run the built-in verifier battery.
//
// Exit codes: 0 success, 2 parameter error, 3 insufficient parties,
// 4 format or corruption error, 5 I/O error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "staircase/bulk.hpp"
#include "staircase/codec.hpp"
#include "staircase/secrecy.hpp"
#include "staircase/selftest.hpp"
#include "staircase/sharefile.hpp"
#include "staircase/tcss.hpp"

namespace fs = std::filesystem;
using namespace staircase;

namespace {

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path.string());
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) throw io_error("read failed on " + path.string());
  return data;
}

void write_file_atomic(const fs::path& target,
                       std::span<const std::uint8_t> bytes) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot create " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw io_error("write failed on " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw io_error("cannot move " + tmp.string() + " into place");
  }
}

struct scheme_flags {
  std::uint32_t n = 0, k = 0, z = 0;
  std::string kind = "universal";
  std::uint32_t d = 0;
  std::vector<std::uint32_t> delta;
};

void add_scheme_flags(CLI::App* cmd, scheme_flags& fl) {
  cmd->add_option("--n", fl.n, "party count")->required();
  cmd->add_option("--k", fl.k, "secret size in units")->required();
  cmd->add_option("--z", fl.z, "collusion bound")->required();
  cmd->add_option("--kind", fl.kind, "construction kind")
      ->check(CLI::IsMember({"fixed", "universal", "delta"}))
      ->capture_default_str();
  cmd->add_option("--d", fl.d, "reconstruction size (kind=fixed)");
  cmd->add_option("--delta", fl.delta,
                  "supported reconstruction sizes (kind=delta)")
      ->delimiter(',');
}

scheme_params make_params(const scheme_flags& fl) {
  if (fl.kind == "fixed") {
    if (fl.d == 0) throw param_error("--kind fixed requires --d");
    if (!fl.delta.empty()) throw param_error("--delta needs --kind delta");
    return params_fixed(fl.n, fl.k, fl.z, fl.d);
  }
  if (fl.kind == "delta") {
    if (fl.d != 0) throw param_error("--d needs --kind fixed");
    return params_delta(fl.n, fl.k, fl.z, fl.delta);
  }
  if (fl.d != 0 || !fl.delta.empty()) {
    throw param_error("--d/--delta are only valid for fixed/delta kinds");
  }
  return params_universal(fl.n, fl.k, fl.z);
}

share_file_header header_template(const scheme_params& p) {
  share_file_header h;
  h.kind = p.kind;
  h.fkind = field_kind::binary8;
  h.modulus = static_cast<std::uint16_t>(binary8_modulus);
  h.n = static_cast<std::uint16_t>(p.n);
  h.k = static_cast<std::uint16_t>(p.k);
  h.z = static_cast<std::uint16_t>(p.z);
  h.d = static_cast<std::uint16_t>(p.kind == scheme_kind::fixed ? p.d_fixed : 0);
  if (p.kind == scheme_kind::delta) {
    for (std::uint32_t v : p.delta_set) {
      h.delta.push_back(static_cast<std::uint16_t>(v));
    }
  }
  h.threshold = static_cast<std::uint16_t>(p.t);
  return h;
}

int cmd_split(const scheme_flags& fl, const std::string& input,
              const std::string& outdir) {
  scheme_params p = make_params(fl);
  if (p.n > 255) {
    throw param_error("binary8 payloads support at most 255 parties");
  }
  field f(field_spec::binary8());
  std::vector<std::uint8_t> data = read_file(input);

  const std::uint64_t ka = p.secret_symbols();
  const std::uint64_t blocks = std::max<std::uint64_t>(
      1, (data.size() + ka - 1) / ka);
  if (blocks > 0xffffffffull) throw param_error("input needs too many blocks");

  layout lay = build_layout(p);
  coeff_maps maps = coefficient_maps(p, lay, f);

  byte_streams secret_streams(ka, std::vector<std::uint8_t>(blocks, 0));
  for (std::size_t i = 0; i < data.size(); ++i) {
    secret_streams[i % ka][i / ka] = data[i];
  }
  system_random_source rng;
  byte_streams key_streams(p.key_symbols());
  for (auto& s : key_streams) {
    s.resize(blocks);
    rng.fill(s);
  }
  byte_streams share_streams;
  gf256_apply_map(maps.a, secret_streams, share_streams, false);
  gf256_apply_map(maps.b, key_streams, share_streams, true);

  share_file_header h = header_template(p);
  h.secret_bytes = data.size();
  h.blocks = static_cast<std::uint32_t>(blocks);

  fs::path dir(outdir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  const std::string stem = fs::path(input).filename().string();
  for (std::uint32_t i = 0; i < p.n; ++i) {
    h.index = static_cast<std::uint16_t>(i);
    h.eval_point = static_cast<std::uint16_t>(i + 1);
    std::vector<std::uint8_t> bytes = encode_header(h);
    bytes.reserve(bytes.size() + blocks * p.alpha);
    for (std::uint64_t b = 0; b < blocks; ++b) {
      for (std::uint64_t c = 0; c < p.alpha; ++c) {
        bytes.push_back(share_streams[std::size_t{i} * p.alpha + c][b]);
      }
    }
    char suffix[16];
    std::snprintf(suffix, sizeof suffix, ".share%03u", i);
    fs::path out = dir / (stem + suffix);
    write_file_atomic(out, bytes);
    std::cout << "wrote: " << out.string() << "\n";
  }
  std::cout << "split " << data.size() << " bytes into " << p.n
            << " shares (" << blocks << " blocks, alpha=" << p.alpha
            << ")\n";
  return 0;
}

struct loaded_share {
  fs::path path;
  share_file_header header;
  std::size_t header_size = 0;
};

loaded_share load_header(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path.string());
  std::vector<std::uint8_t> head(4096);
  in.read(reinterpret_cast<char*>(head.data()),
          static_cast<std::streamsize>(head.size()));
  head.resize(static_cast<std::size_t>(in.gcount()));
  loaded_share ls;
  ls.path = path;
  ls.header = parse_header(head, ls.header_size);
  return ls;
}

void check_payload_length(const loaded_share& ls, const scheme_params& p) {
  const std::uint64_t kept = p.read_len(ls.header.threshold);
  const std::uint64_t expect =
      ls.header_size +
      std::uint64_t{ls.header.blocks} * kept * symbol_width(ls.header.fkind);
  std::error_code ec;
  const std::uint64_t actual = fs::file_size(ls.path, ec);
  if (ec) throw io_error("cannot stat " + ls.path.string());
  if (actual != expect) {
    throw format_error("payload length mismatch in " + ls.path.string() +
                       ": expected " + std::to_string(expect) + " bytes, got " +
                       std::to_string(actual));
  }
}

int cmd_reconstruct(const std::vector<std::string>& share_paths,
                    const std::string& output) {
  if (share_paths.empty()) throw param_error("no share files given");
  std::vector<loaded_share> loaded;
  loaded.reserve(share_paths.size());
  for (const auto& sp : share_paths) loaded.push_back(load_header(sp));

  const share_file_header& h0 = loaded.front().header;
  for (const loaded_share& ls : loaded) {
    if (!ls.header.same_set(h0)) {
      throw corruption_error("share headers disagree: " + ls.path.string());
    }
  }
  scheme_params p = params_from_header(h0);
  field f(spec_from_header(h0));
  if (h0.fkind != field_kind::binary8) {
    throw param_error("reconstruct supports binary8 payloads only");
  }

  std::vector<std::uint32_t> contacted;
  std::vector<const loaded_share*> by_index(p.n, nullptr);
  for (const loaded_share& ls : loaded) {
    if (ls.header.index >= p.n) {
      throw format_error("share index out of range in " + ls.path.string());
    }
    if (by_index[ls.header.index] != nullptr) {
      throw corruption_error("duplicate share index " +
                             std::to_string(ls.header.index));
    }
    by_index[ls.header.index] = &ls;
    contacted.push_back(ls.header.index);
    check_payload_length(ls, p);
  }

  // The recorded plaintext length must fit the recorded block count.
  const std::uint64_t ka0 = p.secret_symbols();
  if (h0.secret_bytes != 0 &&
      (h0.secret_bytes + ka0 - 1) / ka0 > h0.blocks) {
    throw format_error("secret length exceeds the payload capacity");
  }

  read_plan plan = access_plan(p, contacted, h0.threshold);
  layout lay = build_layout(p);
  const std::uint64_t kept = p.read_len(h0.threshold);
  const std::uint64_t spp = plan.symbols_per_party;
  const std::uint64_t blocks = h0.blocks;

  std::vector<symbol> party_points(p.n, 0);
  for (const loaded_share* ls : by_index) {
    if (ls != nullptr) party_points[ls->header.index] = ls->header.eval_point;
  }

  // Fetch exactly the planned prefix of every block from every planned
  // party; when the prefix is the whole block the ranges coalesce into
  // one sequential read.
  byte_streams reads(plan.parties.size() * spp,
                     std::vector<std::uint8_t>(blocks));
  std::uint64_t total_read = 0;
  for (std::size_t slot = 0; slot < plan.parties.size(); ++slot) {
    const loaded_share* ls = by_index[plan.parties[slot]];
    std::ifstream in(ls->path, std::ios::binary);
    if (!in) throw io_error("cannot open " + ls->path.string());
    std::vector<std::uint8_t> buf(spp == kept ? blocks * kept : spp);
    if (spp == kept) {
      in.seekg(static_cast<std::streamoff>(ls->header_size));
      in.read(reinterpret_cast<char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
      if (!in) throw io_error("short read from " + ls->path.string());
      for (std::uint64_t b = 0; b < blocks; ++b) {
        for (std::uint64_t c = 0; c < spp; ++c) {
          reads[slot * spp + c][b] = buf[b * kept + c];
        }
      }
    } else {
      for (std::uint64_t b = 0; b < blocks; ++b) {
        in.seekg(static_cast<std::streamoff>(ls->header_size + b * kept));
        in.read(reinterpret_cast<char*>(buf.data()),
                static_cast<std::streamsize>(spp));
        if (!in) throw io_error("short read from " + ls->path.string());
        for (std::uint64_t c = 0; c < spp; ++c) {
          reads[slot * spp + c][b] = buf[c];
        }
      }
    }
    total_read += blocks * spp;
    std::cout << "read party=" << plan.parties[slot]
              << " bytes=" << blocks * spp << "\n";
  }

  recon_map rm = reconstruction_map(p, lay, f, plan, party_points);
  if (rm.consistency.rows() > 0) {
    byte_streams chk;
    gf256_apply_map(rm.consistency, reads, chk);
    for (const auto& s : chk) {
      for (std::uint8_t v : s) {
        if (v != 0) throw corruption_error("share payloads are inconsistent");
      }
    }
  }
  byte_streams secret_streams;
  gf256_apply_map(rm.secret_from_reads, reads, secret_streams);

  // Cross-check the first block against the structured decoder.
  {
    std::vector<symbol_reading> readings;
    for (std::size_t slot = 0; slot < plan.parties.size(); ++slot) {
      for (std::uint64_t pos = 0; pos < spp; ++pos) {
        readings.push_back(
            {plan.parties[slot], pos, reads[slot * spp + pos][0]});
      }
    }
    std::vector<symbol> via_peel =
        decode_structured(p, lay, f, plan, party_points, readings);
    for (std::uint64_t j = 0; j < p.secret_symbols(); ++j) {
      if (via_peel[j] != secret_streams[j][0]) {
        throw corruption_error("decoder cross-check failed on block 0");
      }
    }
  }

  const std::uint64_t ka = p.secret_symbols();
  std::vector<std::uint8_t> out_bytes(h0.secret_bytes);
  for (std::uint64_t i = 0; i < h0.secret_bytes; ++i) {
    out_bytes[i] = secret_streams[i % ka][i / ka];
  }
  write_file_atomic(output, out_bytes);

  std::cout << "read total bytes=" << total_read << "\n";
  std::cout << "overhead: CO=" << plan.co.str() << " unit, RO="
            << plan.ro.str() << " unit\n";
  std::cout << "wrote: " << output << "\n";
  return 0;
}

int cmd_inspect(const std::string& path) {
  loaded_share ls = load_header(path);
  const share_file_header& h = ls.header;
  scheme_params p = params_from_header(h);
  check_payload_length(ls, p);

  const char* kind_names[] = {"fixed", "universal", "delta"};
  std::cout << "magic: SCSS v" << int{share_version} << "\n";
  std::cout << "scheme: " << kind_names[static_cast<int>(h.kind)] << " (n="
            << h.n << ", k=" << h.k << ", z=" << h.z;
  if (h.kind == scheme_kind::fixed) std::cout << ", d=" << h.d;
  if (h.kind == scheme_kind::delta) {
    std::cout << ", delta={";
    for (std::size_t i = 0; i < h.delta.size(); ++i) {
      std::cout << (i ? "," : "") << h.delta[i];
    }
    std::cout << "}";
  }
  std::cout << ")\n";
  if (h.fkind == field_kind::binary8) {
    std::cout << "field: binary8 (0x011b)\n";
  } else {
    std::cout << "field: prime (modulus " << h.modulus << ")\n";
  }
  std::cout << "alpha: " << p.alpha << " symbols/share\n";
  std::cout << "threshold t: " << p.t << "\n";
  std::cout << "current threshold: " << h.threshold << "\n";
  std::cout << "share index: " << h.index << "\n";
  std::cout << "evaluation point: " << h.eval_point << "\n";
  std::cout << "secret bytes: " << h.secret_bytes << "\n";
  std::cout << "blocks: " << h.blocks << "\n";
  std::cout << "symbols per block: " << p.read_len(h.threshold) << "\n";
  std::cout << "supported d:";
  for (std::uint32_t d : p.d_list) {
    if (d >= h.threshold) std::cout << " " << d;
  }
  std::cout << "\n";
  for (std::uint32_t d : p.d_list) {
    if (d < h.threshold) continue;
    auto [co, ro] = overheads(p, d);
    std::cout << "  d=" << d << ": read " << p.read_len(d)
              << " symbols/party, CO=" << co.str() << " unit, RO=" << ro.str()
              << " unit\n";
  }
  std::cout << "rethreshold targets:\n";
  for (auto it = p.d_list.rbegin(); it != p.d_list.rend(); ++it) {
    const std::uint32_t tp = *it;
    if (tp < h.threshold) continue;
    if (p.kind == scheme_kind::fixed && tp != p.t && tp != p.d_fixed) continue;
    std::cout << "  t'=" << tp << ": keep " << p.read_len(tp)
              << " symbols/block, SC=" << storage_cost(p, tp).str()
              << " unit\n";
  }
  return 0;
}

int cmd_rethreshold(const std::string& path, std::uint32_t t_prime,
                    bool in_place, const std::string& out) {
  if (in_place == !out.empty()) {
    throw param_error("pass exactly one of --in-place or --out");
  }
  std::vector<std::uint8_t> bytes = read_file(path);
  std::size_t header_size = 0;
  share_file_header h = parse_header(bytes, header_size);
  scheme_params p = params_from_header(h);
  if (t_prime < h.threshold) {
    throw param_error("lowering the threshold is refused");
  }
  threshold_state ts = threshold_state_for(p, t_prime);
  const std::uint64_t old_kept = p.read_len(h.threshold);
  const std::size_t width = symbol_width(h.fkind);
  if (bytes.size() - header_size !=
      std::uint64_t{h.blocks} * old_kept * width) {
    throw format_error("payload length mismatch in " + path);
  }

  share_file_header h2 = h;
  h2.threshold = static_cast<std::uint16_t>(t_prime);
  std::vector<std::uint8_t> out_bytes = encode_header(h2);
  for (std::uint64_t b = 0; b < h.blocks; ++b) {
    const std::uint8_t* block = bytes.data() + header_size +
                                b * old_kept * width;
    out_bytes.insert(out_bytes.end(), block,
                     block + ts.kept_symbols * width);
  }
  const fs::path target = in_place ? fs::path(path) : fs::path(out);
  write_file_atomic(target, out_bytes);
  std::cout << "rethresholded to t'=" << t_prime << ", keeping "
            << ts.kept_symbols << " of " << old_kept << " symbols/block\n";
  std::cout << "wrote: " << target.string() << "\n";
  return 0;
}

int cmd_plan(const scheme_flags& fl, std::uint32_t contacted_count) {
  scheme_params p = make_params(fl);
  std::vector<std::uint32_t> contacted(contacted_count);
  std::iota(contacted.begin(), contacted.end(), 0);
  read_plan plan = access_plan(p, contacted, p.t);
  std::cout << "contact " << contacted_count << " parties -> use d="
            << plan.d << ": read " << plan.symbols_per_party
            << " symbols/party, CO=" << plan.co.str() << " unit, RO="
            << plan.ro.str() << " unit\n";
  std::cout << "parties:";
  for (std::uint32_t idx : plan.parties) std::cout << " " << idx;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Staircase secret sharing toolkit"};
  app.require_subcommand(1);

  scheme_flags split_fl;
  std::string split_input, split_out = ".";
  auto* split = app.add_subcommand("split", "split a file into n shares");
  split->add_option("input", split_input, "file to split")->required();
  add_scheme_flags(split, split_fl);
  split->add_option("--out", split_out, "output directory")
      ->capture_default_str();

  std::vector<std::string> rec_shares;
  std::string rec_out;
  auto* rec = app.add_subcommand(
      "reconstruct", "reconstruct the file from share files");
  rec->add_option("shares", rec_shares, "share files")->required();
  rec->add_option("--out", rec_out, "output file")->required();

  std::string ins_path;
  auto* ins = app.add_subcommand("inspect", "describe a share file");
  ins->add_option("share", ins_path, "share file")->required();

  std::string rt_path, rt_out;
  std::uint32_t rt_tprime = 0;
  bool rt_in_place = false;
  auto* rt = app.add_subcommand(
      "rethreshold", "raise a share's threshold by truncating it");
  rt->add_option("share", rt_path, "share file")->required();
  rt->add_option("tprime", rt_tprime, "new threshold")->required();
  rt->add_flag("--in-place", rt_in_place, "rewrite the share file");
  rt->add_option("--out", rt_out, "write the truncated share here");

  scheme_flags plan_fl;
  std::uint32_t plan_contacted = 0;
  auto* plan = app.add_subcommand("plan", "print a read plan");
  plan->add_option("contacted", plan_contacted, "number of contacted parties")
      ->required();
  add_scheme_flags(plan, plan_fl);

  std::uint32_t st_max_n = 6;
  bool st_inject = false;
  auto* st = app.add_subcommand("selftest", "run the built-in verifiers");
  st->add_option("--max-n", st_max_n, "largest party count to sweep")
      ->capture_default_str();
  st->add_flag("--inject-fault", st_inject,
               "mutate a layout and require the verifier to catch it")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (split->parsed()) return cmd_split(split_fl, split_input, split_out);
    if (rec->parsed()) return cmd_reconstruct(rec_shares, rec_out);
    if (ins->parsed()) return cmd_inspect(ins_path);
    if (rt->parsed()) {
      return cmd_rethreshold(rt_path, rt_tprime, rt_in_place, rt_out);
    }
    if (plan->parsed()) return cmd_plan(plan_fl, plan_contacted);
    if (st->parsed()) {
      selftest_options opt{st_max_n, st_inject};
      int failures = run_selftest(opt, std::cout);
      if (failures == 0) {
        std::cout << "selftest: all checks passed\n";
        return 0;
      }
      std::cout << "selftest: " << failures << " check(s) FAILED\n";
      return 1;
    }
  } catch (const param_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const div_zero_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const insufficient_parties_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const corruption_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const decodability_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const singular_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
