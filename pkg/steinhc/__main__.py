from .scripts.run import main

main()
