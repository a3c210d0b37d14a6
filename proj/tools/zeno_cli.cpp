#include <exception>
#include <iostream>

#include "zeno/cli.hpp"

int main(int argc, char** argv) {
    try {
        const auto config = zeno::parse_config(argc, argv);
        const auto table = zeno::run(config);
        if (config.output_path) {
            zeno::write_csv_file(table, *config.output_path);
        } else {
            table.write(std::cout);
            std::cout.flush();
            if (!std::cout) {
                std::cerr << "zeno: error writing to standard output\n";
                return 1;
            }
        }
    } catch (const zeno::HelpRequested& help) {
        std::cout << help.what();
        return 0;
    } catch (const zeno::UsageError& e) {
        std::cerr << "zeno: " << e.what() << "\nRun 'zeno --help' for usage.\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "zeno: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
