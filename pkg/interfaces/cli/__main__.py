# interfaces/cli/__main__.py
from interfaces.cli.main import main

main()
