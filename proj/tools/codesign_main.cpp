// codesign: run the co-design service or work with its data offline.
//
//   codesign serve [--port N --store file --store-dir DIR ...]
//   codesign export --store-dir DIR --room ID --out bundle.zip
//   codesign validate-prompt "Add shaded seating ..." [--username NAME]...
//   codesign demo --out bundle.zip

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <pthread.h>
#include <thread>

#include "codesign/api/config.hpp"
#include "codesign/api/gateway.hpp"
#include "codesign/api/server.hpp"
#include "codesign/api/service.hpp"
#include "codesign/exporter/export_bundle.hpp"
#include "codesign/prompts/validator.hpp"
#include "codesign/store/file_store.hpp"

namespace {

using namespace codesign;

int run_serve(const std::vector<std::string>& args) {
  const api::ServiceConfig config = api::load_config(args);

  // Block termination signals before any thread starts; one thread waits
  // for them and shuts the server down.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  api::Service service(api::parts_from_config(config));
  api::Gateway gateway(service, {config.cors_origin});
  api::Server server(gateway, config.threads);
  const int port = server.bind(config.host, config.port);
  std::cout << "codesign listening on " << config.host << ":" << port << std::endl;

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  server.run();
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return 0;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("cannot write " + path);
}

int run_export(const std::string& store_dir, const std::string& room, const std::string& out) {
  store::FileStore store(store_dir);
  const auto bytes = exporter::serialize_bundle(exporter::export_session(store, room));
  write_file(out, bytes);
  std::cout << "wrote " << bytes.size() << " bytes to " << out << "\n";
  return 0;
}

int run_validate(const std::string& text, const std::vector<std::string>& usernames) {
  prompts::ValidationContext context;
  context.usernames = usernames;
  const auto result = prompts::validate_prompt(text, context);
  nlohmann::json out = {{"valid", result.valid},
                        {"word_count", result.word_count},
                        {"first_word", result.first_word},
                        {"violations", result.violations}};
  std::cout << out.dump(2) << "\n";
  return result.valid ? 0 : 1;
}

int run_demo(const std::string& out) {
  api::Service service(api::mock_parts());
  auto& sessions = service.sessions();
  const std::string room = "demo-plaza";
  sessions.create_or_join_room("maria", room);
  sessions.create_or_join_room("jun", room);
  service.experts().register_expert(room, AgentRole::Planner, agents::RegistrationPhase::AtCreation);
  sessions.set_ready(room, "maria", true);
  sessions.set_ready(room, "jun", true);

  service.studio().save_snapshot(room, "maria", {"CAoSLEFGMVFpcE1demo", 112.5, 4.0, 90.0, 40.7411, -73.9897});
  sessions.post_message(room, "maria", "The sidewalk here feels hot and exposed, we need shade and places to sit.");
  service.experts().query_expert(room, AgentRole::Planner, "jun");
  const auto outcome =
      sessions.post_message(room, "jun", "More trees and greenery would help, maybe planters near the crossing.");
  std::cout << "round 1 closed: " << std::boolalpha << outcome.round_completed << "\n";

  const auto prompt_set = service.prompts().generate(room, "maria");
  std::cout << "prompt set " << prompt_set.prompt_set_id << " (" << prompt_set.items.size() << " items)\n";
  for (const auto& item : prompt_set.items) std::cout << "  - " << item.text << "\n";
  const auto first = service.studio().revise_image(room, "jun", prompt_set.prompt_set_id);
  const auto second = service.studio().revise_image(room, "maria", prompt_set.prompt_set_id);
  std::cout << "revisions: " << first.artifact_id << " (gen " << first.generation_index << "), "
            << second.artifact_id << " (gen " << second.generation_index << ")\n";
  sessions.end_session(room, "maria");

  const auto bytes = exporter::serialize_bundle(exporter::export_session(service.store(), room));
  write_file(out, bytes);
  std::cout << "wrote " << bytes.size() << " bytes to " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"codesign: multi-agent street-scene co-design service"};
  app.require_subcommand(1);

  auto* serve = app.add_subcommand("serve", "run the HTTP service (flags also read from CODESIGN_* variables)");
  serve->allow_extras();

  std::string store_dir, room, out;
  auto* export_cmd = app.add_subcommand("export", "write a room's export bundle from a file store");
  export_cmd->add_option("--store-dir", store_dir, "file store directory")->required();
  export_cmd->add_option("--room", room, "room id")->required();
  export_cmd->add_option("--out", out, "output ZIP path")->required();

  std::string prompt_text;
  std::vector<std::string> usernames;
  auto* validate = app.add_subcommand("validate-prompt", "check a design prompt against the prompt grammar");
  validate->add_option("text", prompt_text, "prompt text")->required();
  validate->add_option("--username", usernames, "participant names that must not appear");

  std::string demo_out = "demo-export.zip";
  auto* demo = app.add_subcommand("demo", "run a scripted session on mock providers and export it");
  demo->add_option("--out", demo_out, "output ZIP path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*serve) return run_serve(serve->remaining());
    if (*export_cmd) return run_export(store_dir, room, out);
    if (*validate) return run_validate(prompt_text, usernames);
    if (*demo) return run_demo(demo_out);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
