from kenmotsu_lab.cli import main

main()
