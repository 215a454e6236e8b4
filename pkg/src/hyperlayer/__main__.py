from hyperlayer.cli import main

main()
