#include "lucas/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>

#include "lucas/analysis.hpp"
#include "lucas/error.hpp"
#include "lucas/exchange.hpp"
#include "lucas/formats.hpp"
#include "lucas/matrices.hpp"
#include "lucas/protocol.hpp"
#include "lucas/sequences.hpp"

namespace lucas {

namespace {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Io:
      return kExitIo;
    case Errc::NotInvertible:
    case Errc::KeyNotInvertible:
    case Errc::DegenerateLambda:
    case Errc::LambdaTooLarge:
    case Errc::ModulusMismatch:
      return kExitProtocol;
    default:
      return kExitValidation;
  }
}

bool codec_mode(Prime p) { return p.value() == kAlphabetSize; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Lucas matrix public-key cipher"};
  app.require_subcommand(1);
  std::function<void()> action;
  int status = kExitOk;

  // keygen
  std::uint64_t kg_p = 0;
  std::optional<std::uint64_t> kg_alpha;
  std::optional<std::uint64_t> kg_d;
  std::string kg_pub;
  std::string kg_sec;
  auto* keygen_cmd = app.add_subcommand("keygen", "Create a public/secret key pair");
  keygen_cmd->add_option("--p", kg_p, "Prime modulus")->required();
  keygen_cmd->add_option("--alpha", kg_alpha, "Primitive root (default: smallest)");
  keygen_cmd->add_option("--d", kg_d, "Secret exponent, 1 < d < p-1 (default: random)");
  keygen_cmd->add_option("--out-pub", kg_pub, "Public key file")->required();
  keygen_cmd->add_option("--out-sec", kg_sec, "Secret key file")->required();
  keygen_cmd->callback([&] {
    action = [&] {
      const Prime p(kg_p);
      const Residue alpha = kg_alpha ? Residue(*kg_alpha, p) : smallest_primitive_root(p);
      if (kg_alpha && *kg_alpha >= p.value()) {
        throw Error(Errc::NotPrimitiveRoot, "alpha must be below p");
      }
      const std::uint64_t d = kg_d ? *kg_d : random_exponent(p);
      const KeyPair keys = keygen(p, alpha, d);
      write_text_file(kg_pub, format_public_key(keys.pub));
      write_text_file(kg_sec, format_secret_key(keys.sec));
      out << "pk(" << p.value() << "," << keys.pub.e1.value() << "," << keys.pub.e2.value() << ")\n";
    };
  });

  // encrypt
  std::string enc_pub;
  std::uint64_t enc_e = 0;
  std::string enc_msg;
  std::string enc_out;
  auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a message to an envelope file");
  encrypt_cmd->add_option("--pub", enc_pub, "Public key file")->required();
  encrypt_cmd->add_option("--e", enc_e, "Sender exponent, 1 < e < p-1")->required();
  encrypt_cmd->add_option("--msg", enc_msg, "Message (A-Z, 0-9, space for p=37; comma-separated residues otherwise)")
      ->required();
  encrypt_cmd->add_option("--out", enc_out, "Envelope file")->required();
  encrypt_cmd->callback([&] {
    action = [&] {
      const PublicKey pk = parse_public_key(read_text_file(enc_pub));
      const SymbolStream plain = codec_mode(pk.p) ? encode_text(enc_msg) : parse_symbols(enc_msg);
      SessionParams session = [&] {
        try {
          return derive_session(pk, enc_e);
        } catch (const Error& e) {
          if (e.code() == Errc::DegenerateLambda || e.code() == Errc::KeyNotInvertible ||
              e.code() == Errc::LambdaTooLarge) {
            throw Error(e.code(), std::string(e.what()) + " (choose a different --e)");
          }
          throw;
        }
      }();
      const Envelope env{session.s(), encrypt(pad_blocks(plain, session.lambda()), session)};
      write_text_file(enc_out, format_envelope(env));
      out << "s=" << env.s << '\n';
      if (codec_mode(pk.p)) {
        out << "ciphertext: " << decode_text(env.ciphertext) << '\n';
      } else {
        out << "ciphertext: " << format_symbols(env.ciphertext) << '\n';
      }
    };
  });

  // decrypt
  std::string dec_sec;
  std::string dec_env;
  auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt an envelope file");
  decrypt_cmd->add_option("--sec", dec_sec, "Secret key file")->required();
  decrypt_cmd->add_option("--env", dec_env, "Envelope file")->required();
  decrypt_cmd->callback([&] {
    action = [&] {
      const SecretKey sk = parse_secret_key(read_text_file(dec_sec));
      const Envelope env = parse_envelope(read_text_file(dec_env));
      if (codec_mode(sk.p)) {
        for (std::size_t i = 0; i < env.ciphertext.size(); ++i) {
          if (env.ciphertext[i] >= kAlphabetSize) {
            throw Error(Errc::SymbolOutOfRange, "ciphertext symbol " + std::to_string(env.ciphertext[i]) +
                                                    " at position " + std::to_string(i) + " is outside Z_37");
          }
        }
      }
      const SessionParams session = recover_session(env.s, sk);
      const SymbolStream plain = decrypt(env.ciphertext, session);
      out << (codec_mode(sk.p) ? decode_text(plain) : format_symbols(plain)) << '\n';
    };
  });

  // exchange-demo
  ExchangeConfig demo;
  std::optional<std::uint64_t> demo_receiver_d;
  auto* demo_cmd = app.add_subcommand("exchange-demo", "Run sender and receiver over loopback TCP");
  demo_cmd->add_option("--port", demo.port, "Listener port (0 = any free port)");
  demo_cmd->add_option("--p", demo.p, "Prime modulus")->capture_default_str();
  demo_cmd->add_option("--alpha", demo.alpha, "Primitive root")->capture_default_str();
  demo_cmd->add_option("--d", demo.d, "Receiver secret exponent")->capture_default_str();
  demo_cmd->add_option("--e", demo.e, "Sender exponent")->capture_default_str();
  demo_cmd->add_option("--msg", demo.message, "Message")->capture_default_str();
  demo_cmd->add_option("--receiver-d", demo_receiver_d, "Make the receiver use this (wrong) exponent");
  demo_cmd->callback([&] {
    action = [&] {
      demo.receiver_d = demo_receiver_d;
      const ExchangeResult result = run_exchange_demo(demo);
      for (const auto& line : result.transcript) out << line << '\n';
      if (!result.match) status = kExitProtocol;
    };
  });

  // seq
  int seq_k = 0;
  std::int64_t seq_from = 0;
  std::int64_t seq_to = 0;
  std::string seq_kind = "lucas";
  auto* seq_cmd = app.add_subcommand("seq", "Print sequence terms as index<TAB>value");
  seq_cmd->add_option("--k", seq_k, "Order k >= 2")->required();
  seq_cmd->add_option("--from", seq_from, "First index")->required();
  seq_cmd->add_option("--to", seq_to, "Last index")->required();
  seq_cmd->add_option("--kind", seq_kind, "lucas or fib")->check(CLI::IsMember({"lucas", "fib"}))->capture_default_str();
  seq_cmd->callback([&] {
    action = [&] {
      if (seq_to < seq_from) throw Error(Errc::Parse, "--to must not be below --from");
      const auto terms = seq_kind == "fib" ? fib_range(seq_k, seq_from, seq_to) : lucas_range(seq_k, seq_from, seq_to);
      for (std::int64_t n = seq_from; n <= seq_to; ++n) {
        out << n << '\t' << terms[static_cast<std::size_t>(n - seq_from)] << '\n';
      }
    };
  });

  // matrix
  int mat_k = 0;
  std::int64_t mat_n = 0;
  std::uint64_t mat_p = 0;
  std::string mat_kind = "glm";
  auto* matrix_cmd = app.add_subcommand("matrix", "Print a GLM/GFM power mod p");
  matrix_cmd->add_option("--k", mat_k, "Order k >= 2")->required();
  matrix_cmd->add_option("--n", mat_n, "Index n (may be negative)")->required();
  matrix_cmd->add_option("--p", mat_p, "Prime modulus")->required();
  matrix_cmd->add_option("--kind", mat_kind, "glm, gfm or glm-inverse")
      ->check(CLI::IsMember({"glm", "gfm", "glm-inverse"}))
      ->capture_default_str();
  matrix_cmd->callback([&] {
    action = [&] {
      const Prime p(mat_p);
      if (mat_kind == "gfm") {
        out << gfm(mat_k, mat_n, p);
      } else if (mat_kind == "glm-inverse") {
        out << glm_closed_inverse(mat_k, mat_n, p);
      } else {
        out << glm(mat_k, mat_n, p);
      }
    };
  });

  // analyze
  int an_lambda = 0;
  std::uint64_t an_p = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report the size of GL_lambda(F_p)");
  analyze_cmd->add_option("--lambda", an_lambda, "Matrix order")->required();
  analyze_cmd->add_option("--p", an_p, "Prime modulus")->required();
  analyze_cmd->callback([&] {
    action = [&] {
      const KeyspaceReport report = keyspace_report(an_lambda, Prime(an_p));
      out << format_report(report) << '\n';
      out << "approx=" << report.significand() << "e" << report.decimal_magnitude << '\n';
      out << "remark: the keyspace depends on lambda only, not on the signature s\n";
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (action) action();
    return status;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace lucas
